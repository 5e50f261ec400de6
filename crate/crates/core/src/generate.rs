//! Poset sources for tests and experiments: exhaustive enumeration of small
//! labeled posets, seeded random posets, and a brute-force antichain oracle.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Largest `n` accepted by [`enumerate_posets`]. There are 130023 labeled
/// posets on 6 elements and 6129859 on 7.
pub const MAX_ENUMERATION_N: usize = 6;

/// Largest `n` accepted by [`max_antichain_bruteforce`].
pub const MAX_BRUTEFORCE_N: usize = 20;

/// Every labeled poset on `0..n`, each exactly once.
///
/// A poset on `k + 1` elements restricts to a unique poset on the first `k`,
/// and extends it by choosing a downset `D` and an upset `U` for the new
/// element with every element of `D` below every element of `U`. The layer
/// for `n - 1` is built eagerly, the last layer is streamed.
pub fn enumerate_posets(n: usize) -> Result<impl Iterator<Item = Poset>> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "a poset needs at least one element".into(),
        ));
    }
    if n > MAX_ENUMERATION_N {
        return Err(Error::Limit {
            what: "poset enumeration size",
            value: n,
            limit: MAX_ENUMERATION_N,
        });
    }
    let mut layer: Vec<Vec<u64>> = vec![vec![0]];
    for k in 1..n - 1 {
        layer = layer.iter().flat_map(|rows| extensions(rows, k)).collect();
    }
    let last = n - 1;
    let stream: Box<dyn Iterator<Item = Vec<u64>>> = if n == 1 {
        Box::new(layer.into_iter())
    } else {
        Box::new(
            layer
                .into_iter()
                .flat_map(move |rows| extensions(&rows, last)),
        )
    };
    Ok(stream.map(move |rows| Poset::from_closed_rows(n, rows)))
}

/// All one-element extensions of the closed relation `rows` on `0..k`.
fn extensions(rows: &[u64], k: usize) -> Vec<Vec<u64>> {
    let below = |d: usize| -> u64 {
        (0..k)
            .filter(|&x| rows[x] >> d & 1 == 1)
            .fold(0, |m, x| m | 1 << x)
    };
    let preds: Vec<u64> = (0..k).map(below).collect();

    let is_downset = |set: u64| {
        (0..k)
            .filter(|&x| set >> x & 1 == 1)
            .all(|x| preds[x] & !set == 0)
    };
    let is_upset = |set: u64| {
        (0..k)
            .filter(|&x| set >> x & 1 == 1)
            .all(|x| rows[x] & !set == 0)
    };

    let downs: Vec<u64> = (0..1u64 << k).filter(|&s| is_downset(s)).collect();
    let ups: Vec<u64> = (0..1u64 << k).filter(|&s| is_upset(s)).collect();

    let mut out = Vec::new();
    for &down in &downs {
        // every element of the upset must sit above every element of the downset
        let common_above = (0..k)
            .filter(|&d| down >> d & 1 == 1)
            .fold((1u64 << k) - 1, |acc, d| acc & rows[d]);
        for &up in &ups {
            if up & !common_above != 0 {
                continue;
            }
            let mut ext: Vec<u64> = rows.to_vec();
            for (d, row) in ext.iter_mut().enumerate() {
                if down >> d & 1 == 1 {
                    *row |= 1 << k;
                }
            }
            ext.push(up);
            out.push(ext);
        }
    }
    out
}

fn check_probability(edge_prob: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::InvalidArgument(format!(
            "edge probability {edge_prob} outside [0, 1]"
        )));
    }
    Ok(())
}

/// Random poset: shuffle the elements into a uniform linear order, keep each
/// forward arc independently with probability `edge_prob`, then close.
/// Fully determined by `seed`.
pub fn random_poset(n: usize, edge_prob: f64, seed: u64) -> Result<Poset> {
    check_probability(edge_prob)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(edge_prob) {
                pairs.push((order[i], order[j]));
            }
        }
    }
    Poset::from_relations(n, &pairs)
}

/// Random poset containing a planted antichain of `size` elements.
///
/// Non-antichain elements are split at random into a lower and an upper
/// group; random forward arcs run lower → antichain → upper and within each
/// group, never between two antichain elements or downward. Returns the
/// poset and its planted antichain, ascending.
pub fn random_poset_with_antichain(
    n: usize,
    size: usize,
    edge_prob: f64,
    seed: u64,
) -> Result<(Poset, Vec<usize>)> {
    check_probability(edge_prob)?;
    if size == 0 || size > n {
        return Err(Error::InvalidArgument(format!(
            "antichain size {size} must lie in [1, {n}]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(&mut rng);

    // Tier 0 = lower, 1 = antichain, 2 = upper; positions sorted by tier.
    let mut tiers: Vec<u8> = (0..n).map(|i| if i < size { 1 } else { 0 }).collect();
    for t in tiers.iter_mut().skip(size) {
        *t = if rng.random_bool(0.5) { 0 } else { 2 };
    }
    tiers.sort_unstable();

    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if tiers[i] == 1 && tiers[j] == 1 {
                continue;
            }
            if rng.random_bool(edge_prob) {
                pairs.push((labels[i], labels[j]));
            }
        }
    }
    let poset = Poset::from_relations(n, &pairs)?;
    let mut antichain: Vec<usize> = (0..n)
        .filter(|&i| tiers[i] == 1)
        .map(|i| labels[i])
        .collect();
    antichain.sort_unstable();
    debug_assert!(poset.is_antichain(&antichain));
    Ok((poset, antichain))
}

/// A maximum antichain by exhaustive branch and bound. Exponential; meant as
/// an oracle for small posets only.
pub fn max_antichain_bruteforce(poset: &Poset) -> Result<Vec<usize>> {
    let n = poset.len();
    if n > MAX_BRUTEFORCE_N {
        return Err(Error::Limit {
            what: "brute-force antichain size",
            value: n,
            limit: MAX_BRUTEFORCE_N,
        });
    }
    // incomparable[u] = elements incomparable to u
    let incomparable: Vec<u32> = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| !poset.comparable(u, v))
                .fold(0, |m, v| m | 1 << v)
        })
        .collect();

    fn search(candidates: u32, chosen: u32, best: &mut u32, incomparable: &[u32]) {
        if chosen.count_ones() + candidates.count_ones() <= best.count_ones() {
            return;
        }
        if candidates == 0 {
            *best = chosen;
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        let rest = candidates & !(1 << v);
        search(rest & incomparable[v], chosen | 1 << v, best, incomparable);
        search(rest, chosen, best, incomparable);
    }

    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best = 0u32;
    search(all, 0, &mut best, &incomparable);
    Ok((0..n).filter(|&v| best >> v & 1 == 1).collect())
}
