//! Minimum chain decompositions and maximum antichains.
//!
//! Both come from one maximum matching in the bipartite graph that has a
//! left and a right copy of every element and an edge `u → v` whenever
//! `u ≺ v`. Matched edges link elements into chains, so the number of chains
//! is `n - |M|`; the complement of a König vertex cover gives an antichain
//! of the same size.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::poset::Poset;

const UNREACHED: usize = usize::MAX;

/// A maximum matching of the comparability bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparabilityMatching {
    succ: Vec<Option<usize>>,
    pred: Vec<Option<usize>>,
}

impl ComparabilityMatching {
    /// Hopcroft–Karp: BFS layers from free left vertices, then vertex-disjoint
    /// shortest augmenting paths along those layers, until none remain.
    pub fn maximum(poset: &Poset) -> ComparabilityMatching {
        let n = poset.len();
        let adj: Vec<Vec<usize>> = (0..n).map(|u| poset.successors(u).collect()).collect();
        let mut succ: Vec<Option<usize>> = vec![None; n];
        let mut pred: Vec<Option<usize>> = vec![None; n];
        let mut dist = vec![UNREACHED; n];
        let mut cursor = vec![0usize; n];

        loop {
            let mut queue = VecDeque::new();
            for u in 0..n {
                if succ[u].is_none() {
                    dist[u] = 0;
                    queue.push_back(u);
                } else {
                    dist[u] = UNREACHED;
                }
            }
            let mut found = false;
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    match pred[v] {
                        None => found = true,
                        Some(w) if dist[w] == UNREACHED => {
                            dist[w] = dist[u] + 1;
                            queue.push_back(w);
                        }
                        Some(_) => {}
                    }
                }
            }
            if !found {
                break;
            }
            cursor.fill(0);
            for u in 0..n {
                if succ[u].is_none() {
                    augment(u, &adj, &mut succ, &mut pred, &mut dist, &mut cursor);
                }
            }
        }
        ComparabilityMatching { succ, pred }
    }

    pub fn size(&self) -> usize {
        self.succ.iter().flatten().count()
    }

    /// The element matched above `u`, if any.
    pub fn successor_of(&self, u: usize) -> Option<usize> {
        self.succ[u]
    }

    /// The element matched below `v`, if any.
    pub fn predecessor_of(&self, v: usize) -> Option<usize> {
        self.pred[v]
    }

    /// Matched pairs `(u, v)` with `u ≺ v`, by ascending `u`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .filter_map(|(u, v)| v.map(|v| (u, v)))
    }
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    succ: &mut [Option<usize>],
    pred: &mut [Option<usize>],
    dist: &mut [usize],
    cursor: &mut [usize],
) -> bool {
    while cursor[u] < adj[u].len() {
        let v = adj[u][cursor[u]];
        cursor[u] += 1;
        let next = match pred[v] {
            None => true,
            Some(w) => dist[w] == dist[u] + 1 && augment(w, adj, succ, pred, dist, cursor),
        };
        if next {
            succ[u] = Some(v);
            pred[v] = Some(u);
            return true;
        }
    }
    dist[u] = UNREACHED;
    false
}

/// A partition of the elements into chains.
///
/// Each chain is listed bottom to top. Chains are sorted by length
/// descending, ties broken by smallest element ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    chains: Vec<Vec<usize>>,
}

impl ChainDecomposition {
    /// Sorts the chains into canonical order.
    pub fn new(mut chains: Vec<Vec<usize>>) -> ChainDecomposition {
        chains.sort_by_key(|c| (std::cmp::Reverse(c.len()), c.iter().copied().min()));
        ChainDecomposition { chains }
    }

    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    /// Number of chains.
    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    /// Chain lengths, weakly decreasing.
    pub fn lengths(&self) -> Vec<usize> {
        self.chains.iter().map(Vec::len).collect()
    }

    /// Checks that the chains partition the poset and ascend in `≺`.
    pub fn validate(&self, poset: &Poset) -> Result<()> {
        let n = poset.len();
        let mut seen = vec![false; n];
        for chain in &self.chains {
            if chain.is_empty() {
                return Err(Error::InvalidArgument("empty chain".into()));
            }
            for &e in chain {
                if e >= n {
                    return Err(Error::ElementOutOfRange { element: e, n });
                }
                if std::mem::replace(&mut seen[e], true) {
                    return Err(Error::InvalidArgument(format!("element {e} appears twice")));
                }
            }
            if let Some(w) = chain.windows(2).find(|w| !poset.less(w[0], w[1])) {
                return Err(Error::InvalidArgument(format!(
                    "{} ⊀ {} inside a chain",
                    w[0], w[1]
                )));
            }
        }
        if let Some(e) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidArgument(format!(
                "element {e} is not covered"
            )));
        }
        let lengths = self.lengths();
        if lengths.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument("chains not sorted by length".into()));
        }
        Ok(())
    }
}

/// Chains read off the matching: start at every element with no matched
/// predecessor and follow matched successors.
pub fn chains_from_matching(poset: &Poset, matching: &ComparabilityMatching) -> ChainDecomposition {
    let chains = (0..poset.len())
        .filter(|&v| matching.predecessor_of(v).is_none())
        .map(|head| std::iter::successors(Some(head), |&u| matching.successor_of(u)).collect())
        .collect();
    ChainDecomposition::new(chains)
}

/// A chain decomposition with the fewest possible chains.
pub fn min_chain_decomposition(poset: &Poset) -> ChainDecomposition {
    chains_from_matching(poset, &ComparabilityMatching::maximum(poset))
}

/// König extraction: let `Z` be everything reachable from free left vertices
/// by alternating paths. The cover is `(L \ Z) ∪ (R ∩ Z)`, and an element is
/// in the antichain iff neither of its copies is in the cover.
pub fn antichain_from_matching(poset: &Poset, matching: &ComparabilityMatching) -> Vec<usize> {
    let n = poset.len();
    let mut left_reached = vec![false; n];
    let mut right_reached = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n)
        .filter(|&u| matching.successor_of(u).is_none())
        .collect();
    for &u in &queue {
        left_reached[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for v in poset.successors(u) {
            if std::mem::replace(&mut right_reached[v], true) {
                continue;
            }
            if let Some(w) = matching.predecessor_of(v) {
                if !std::mem::replace(&mut left_reached[w], true) {
                    queue.push_back(w);
                }
            }
        }
    }
    (0..n)
        .filter(|&x| left_reached[x] && !right_reached[x])
        .collect()
}

/// A maximum antichain, ascending. Its size equals the number of chains in
/// [`min_chain_decomposition`].
pub fn max_antichain(poset: &Poset) -> Vec<usize> {
    antichain_from_matching(poset, &ComparabilityMatching::maximum(poset))
}

/// Width of the poset: the size of a largest antichain.
pub fn width(poset: &Poset) -> usize {
    poset.len() - ComparabilityMatching::maximum(poset).size()
}

/// A minimum chain decomposition, provided it uses at most `a` chains.
///
/// Never splits chains to reach exactly `a`.
pub fn decomposition_with_at_most(poset: &Poset, a: usize) -> Result<ChainDecomposition> {
    if a == 0 || a > poset.len() {
        return Err(Error::InvalidArgument(format!(
            "chain budget a = {a} must lie in [1, {}]",
            poset.len()
        )));
    }
    let decomposition = min_chain_decomposition(poset);
    if decomposition.len() > a {
        return Err(Error::Infeasible {
            antichain: decomposition.len(),
            a,
        });
    }
    Ok(decomposition)
}
