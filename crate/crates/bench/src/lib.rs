//! Shared inputs for the construction benchmarks.

use uniposet::{random_poset, random_poset_with_antichain, Poset};

/// `count` random posets on `n` elements, seeded `0..count`.
pub fn sparse_posets(n: usize, count: u64, edge_prob: f64) -> Vec<Poset> {
    (0..count)
        .map(|seed| random_poset(n, edge_prob, seed).expect("valid parameters"))
        .collect()
}

/// Posets whose width is forced above `⌈n/3⌉`, so embedding takes the
/// antichain labelling route.
pub fn wide_posets(n: usize, count: u64) -> Vec<Poset> {
    let width = n.div_ceil(3) + 1;
    (0..count)
        .map(|seed| {
            random_poset_with_antichain(n, width, 0.3, seed)
                .expect("valid parameters")
                .0
        })
        .collect()
}
