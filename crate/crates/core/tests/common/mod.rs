//! Independent oracles. Nothing here calls into the code paths it checks.
#![allow(dead_code)]

use std::collections::BTreeSet;

use uniposet::{Embedding, Poset};

/// All strict partial orders on `0..n` by filtering every relation on the
/// `n(n-1)` off-diagonal pairs. Each relation is a list of rows of bools.
pub fn brute_force_relations(n: usize) -> Vec<Vec<Vec<bool>>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for bits in 0u64..1 << pairs.len() {
        let mut rel = vec![vec![false; n]; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            rel[u][v] = bits >> i & 1 == 1;
        }
        let antisymmetric = (0..n).all(|u| (0..n).all(|v| !(rel[u][v] && rel[v][u])));
        let transitive =
            (0..n).all(|u| (0..n).all(|v| (0..n).all(|w| !(rel[u][v] && rel[v][w]) || rel[u][w])));
        if antisymmetric && transitive {
            out.push(rel);
        }
    }
    out
}

pub fn relation_of(p: &Poset) -> Vec<Vec<bool>> {
    let n = p.len();
    (0..n)
        .map(|u| (0..n).map(|v| p.less(u, v)).collect())
        .collect()
}

/// Images as plain sets of ground elements.
pub fn image_sets(f: &Embedding) -> Vec<BTreeSet<usize>> {
    f.images().iter().map(|s| s.elements().collect()).collect()
}

/// `u ⪯ v ⟺ f(u) ⊆ f(v)` over all ordered pairs plus injectivity, on
/// `BTreeSet`s and the relation matrix.
pub fn naive_is_embedding(rel: &[Vec<bool>], images: &[BTreeSet<usize>]) -> bool {
    let n = rel.len();
    if images.len() != n {
        return false;
    }
    for u in 0..n {
        for v in 0..n {
            let leq = u == v || rel[u][v];
            if leq != images[u].is_subset(&images[v]) {
                return false;
            }
            if u != v && images[u] == images[v] {
                return false;
            }
        }
    }
    true
}

/// Partitions of `n` into at most `k` parts, weakly decreasing, by plain
/// recursion.
pub fn naive_partitions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == k {
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, k, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `n` by the `q(n, largest part)` table, u128.
pub fn partition_count_table(n: usize) -> u128 {
    // ways[s] = partitions of s into parts from 1..=k, for growing k
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for k in 1..=n {
        for s in k..=n {
            ways[s] += ways[s - k];
        }
    }
    ways[n]
}

/// Literal membership test: scan every partition of `n` into at most `a`
/// parts and check the per-cell prefix condition on a set of elements.
pub fn scan_membership(set: &BTreeSet<usize>, n: usize, a: usize) -> bool {
    if set.iter().any(|&e| e == 0 || e > n) {
        return false;
    }
    naive_partitions(n, a).iter().any(|parts| {
        let mut start = 0;
        parts.iter().all(|&c| {
            let cell = start + 1..=start + c;
            start += c;
            let hit: Vec<bool> = cell.map(|e| set.contains(&e)).collect();
            let ones = hit.iter().take_while(|&&b| b).count();
            hit[ones..].iter().all(|&b| !b)
        })
    })
}

/// Simple augmenting-path search (Kuhn) from one free left vertex of the
/// comparability graph, given a matching as `succ[u] = Some(v)`.
pub fn has_augmenting_path(p: &Poset, succ: &[Option<usize>]) -> bool {
    let n = p.len();
    let mut pred = vec![None; n];
    for (u, v) in succ.iter().enumerate() {
        if let Some(v) = v {
            pred[*v] = Some(u);
        }
    }
    fn dfs(u: usize, p: &Poset, pred: &[Option<usize>], seen: &mut [bool]) -> bool {
        for v in 0..p.len() {
            if !p.less(u, v) || seen[v] {
                continue;
            }
            seen[v] = true;
            match pred[v] {
                None => return true,
                Some(w) => {
                    if dfs(w, p, pred, seen) {
                        return true;
                    }
                }
            }
        }
        false
    }
    (0..n)
        .filter(|&u| succ[u].is_none())
        .any(|u| dfs(u, p, &pred, &mut vec![false; n]))
}

/// Largest antichain size by trying every subset. Tiny `n` only.
pub fn antichain_number_by_subsets(p: &Poset) -> usize {
    let n = p.len();
    (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|u| {
                (0..n).all(|v| u == v || s >> u & 1 == 0 || s >> v & 1 == 0 || !p.less(u, v))
            })
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
