//! Set families for posets of bounded width.
//!
//! A partition `c_1 ≥ … ≥ c_k` of `n` cuts `[n]` into consecutive cells of
//! those lengths, in that order. The prefix family of the partition holds
//! every subset meeting each cell in an initial segment of the cell. Listing
//! a poset's chains longest first along the cells, each element's downset is
//! such a prefix union, so the union of prefix families over all partitions
//! into at most `a` parts hosts every poset of width at most `a`.

use std::ops::RangeInclusive;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::dilworth::decomposition_with_at_most;
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::family::{family_stride, FamilyBuilder, SetFamily};
use crate::partition::{partition_count, partitions, PartitionSeq};
use crate::poset::Poset;
use crate::subset::{clear_bit, set_bit, test_bit, SubsetMask};

/// Default bound on the number of sets a family may materialize.
pub const DEFAULT_FAMILY_CAP: usize = 1 << 24;

/// Largest ground set accepted by [`member_of_chain_family`]; its table
/// has `(n + 1)^2` entries.
pub const MAX_MEMBERSHIP_N: usize = 2048;

/// Cell boundaries `0 = ℓ_0 < ℓ_1 < … < ℓ_k = n` for a partition, with cell
/// `i` covering ground elements `ℓ_{i-1} + 1 ..= ℓ_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellLayout {
    boundaries: Vec<usize>,
}

impl CellLayout {
    pub fn new(partition: &PartitionSeq) -> CellLayout {
        let mut boundaries = Vec::with_capacity(partition.len() + 1);
        boundaries.push(0);
        let mut acc = 0;
        for &c in partition.parts() {
            acc += c;
            boundaries.push(acc);
        }
        CellLayout { boundaries }
    }

    pub fn boundaries(&self) -> &[usize] {
        &self.boundaries
    }

    pub fn ground_size(&self) -> usize {
        *self.boundaries.last().expect("at least ℓ_0")
    }

    /// Number of cells.
    pub fn len(&self) -> usize {
        self.boundaries.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Cell `i` (0-based) as 1-indexed ground elements.
    pub fn cell(&self, i: usize) -> RangeInclusive<usize> {
        self.boundaries[i] + 1..=self.boundaries[i + 1]
    }

    pub fn cells(&self) -> impl Iterator<Item = RangeInclusive<usize>> + '_ {
        (0..self.len()).map(|i| self.cell(i))
    }

    /// True iff `set` meets every cell in a (possibly empty) prefix.
    pub fn is_prefix_union(&self, set: &SubsetMask) -> bool {
        set.fits_within(self.ground_size())
            && self.cells().all(|cell| {
                let inside = cell.clone().take_while(|&e| set.contains(e)).count();
                cell.skip(inside).all(|e| !set.contains(e))
            })
    }
}

/// Walks every prefix union of the layout, handing each mask to `visit`.
///
/// Cell `i` carries a digit `t_i ∈ 0..=c_i` (its prefix length); the digits
/// advance like an odometer and the mask is patched incrementally.
fn for_each_prefix_union<F>(layout: &CellLayout, stride: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&[u64]) -> Result<()>,
{
    let bounds = layout.boundaries();
    let cells = layout.len();
    let mut digits = vec![0usize; cells];
    let mut mask = vec![0u64; stride];
    visit(&mask)?;
    loop {
        let mut i = 0;
        loop {
            if i == cells {
                return Ok(());
            }
            let (start, end) = (bounds[i], bounds[i + 1]);
            if start + digits[i] < end {
                set_bit(&mut mask, start + digits[i]);
                digits[i] += 1;
                break;
            }
            for bit in start..end {
                clear_bit(&mut mask, bit);
            }
            digits[i] = 0;
            i += 1;
        }
        visit(&mask)?;
    }
}

fn check_partition(n: usize, partition: &PartitionSeq) -> Result<()> {
    if partition.total() != n {
        return Err(Error::InvalidArgument(format!(
            "partition {partition} sums to {}, not {n}",
            partition.total()
        )));
    }
    Ok(())
}

/// `∏ (c_i + 1)`, the size of a prefix family.
pub fn prefix_family_size(partition: &PartitionSeq) -> BigUint {
    partition
        .parts()
        .iter()
        .map(|&c| BigUint::from(c + 1))
        .product()
}

/// The prefix family of `partition` over `[n]`, capped at `cap` sets.
pub fn family_for_partition_capped(
    n: usize,
    partition: &PartitionSeq,
    cap: usize,
) -> Result<SetFamily> {
    check_partition(n, partition)?;
    let size = prefix_family_size(partition);
    if size > BigUint::from(cap) {
        return Err(Error::MemoryLimit { cap });
    }
    let size = size.to_usize().expect("bounded by cap");
    let stride = family_stride(n);
    let mut words = Vec::with_capacity(size * stride);
    for_each_prefix_union(&CellLayout::new(partition), stride, |mask| {
        words.extend_from_slice(mask);
        Ok(())
    })?;
    Ok(SetFamily::from_unsorted_words(n, words))
}

/// The prefix family of `partition` over `[n]`: exactly `∏ (c_i + 1)` sets.
pub fn family_for_partition(n: usize, partition: &PartitionSeq) -> Result<SetFamily> {
    family_for_partition_capped(n, partition, DEFAULT_FAMILY_CAP)
}

fn check_width_budget(n: usize, a: usize) -> Result<()> {
    if n == 0 || a == 0 || a > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= a <= n, got n = {n}, a = {a}"
        )));
    }
    Ok(())
}

/// The largest single prefix family among partitions of `n` into at most
/// `a` parts: `a' = min(a, n)` parts as equal as possible. A lower bound on
/// the size of [`chain_family`].
pub fn largest_prefix_family(n: usize, a: usize) -> BigUint {
    let parts = a.min(n).max(1);
    let (q, r) = (n / parts, n % parts);
    BigUint::from(q + 2).pow(r as u32) * BigUint::from(q + 1).pow((parts - r) as u32)
}

/// Union of the prefix families of all partitions of `n` into at most `a`
/// parts, materialized as long as it holds at most `cap` sets.
pub fn chain_family(n: usize, a: usize, cap: usize) -> Result<SetFamily> {
    check_width_budget(n, a)?;
    if largest_prefix_family(n, a) > BigUint::from(cap) {
        return Err(Error::MemoryLimit { cap });
    }
    let stride = family_stride(n);
    let mut builder = FamilyBuilder::new(n, cap);
    for partition in partitions(n, a) {
        for_each_prefix_union(&CellLayout::new(&partition), stride, |mask| {
            builder.insert(mask)
        })?;
    }
    builder.finish()
}

/// The size bound `p(n) · a · (n/a + 1)^a`, exact.
pub fn chain_family_bound(n: usize, a: usize) -> BigRational {
    let a_big = BigRational::from_integer(a.into());
    let base = BigRational::from_integer(n.into()) / &a_big + BigRational::one();
    BigRational::from_integer(partition_count(n).into()) * a_big * num_traits::pow(base, a)
}

/// Membership in [`chain_family`] without materializing it.
///
/// Conceptually a scan over all partitions of `n` into at most `a` parts,
/// asking whether `set` is a prefix union for the partition's layout. The
/// scan is folded into a table: `fewest[pos][len]` is the fewest cells that
/// tile `pos+1 ..= n` with weakly decreasing lengths, each at most `len`,
/// each meeting `set` in a prefix. Then `set` is a member iff
/// `fewest[0][n] <= a`.
pub fn member_of_chain_family(set: &SubsetMask, n: usize, a: usize) -> Result<bool> {
    check_width_budget(n, a)?;
    if n > MAX_MEMBERSHIP_N {
        return Err(Error::Limit {
            what: "membership scan size",
            value: n,
            limit: MAX_MEMBERSHIP_N,
        });
    }
    if !set.fits_within(n) {
        return Ok(false);
    }
    let mut words = set.words().to_vec();
    words.resize(family_stride(n), 0);
    let bit = |i: usize| test_bit(&words, i);

    // A cell starting at bit `pos` meets `set` in a prefix iff it stops
    // before the first set bit that follows the run of ones at `pos`.
    let mut ones = vec![0usize; n + 1];
    let mut next_one = vec![n; n + 1];
    for pos in (0..n).rev() {
        if bit(pos) {
            ones[pos] = ones[pos + 1] + 1;
            next_one[pos] = pos;
        } else {
            next_one[pos] = next_one[pos + 1];
        }
    }
    let reach: Vec<usize> = (0..n).map(|pos| next_one[pos + ones[pos]] - pos).collect();

    const UNTILED: u16 = u16::MAX;
    let width = n + 1;
    let mut fewest = vec![UNTILED; width * width];
    for len in 0..=n {
        fewest[n * width + len] = 0;
    }
    for pos in (0..n).rev() {
        for len in 1..=n {
            let mut best = fewest[pos * width + len - 1];
            if len <= reach[pos] && pos + len <= n {
                best = best.min(fewest[(pos + len) * width + len].saturating_add(1));
            }
            fewest[pos * width + len] = best;
        }
    }
    Ok(usize::from(fewest[n]) <= a)
}

/// Embeds a poset of width at most `a` into `[n]` with every image in
/// [`chain_family`]`(n, a)`.
///
/// Elements are renamed along a minimum chain decomposition, chains longest
/// first and each chain bottom to top; element `j` then maps to the new
/// names of its downset.
pub fn embed_bounded_antichain(poset: &Poset, a: usize) -> Result<Embedding> {
    let n = poset.len();
    let decomposition = decomposition_with_at_most(poset, a)?;
    let mut rank = vec![0usize; n];
    for (position, &element) in decomposition.chains().iter().flatten().enumerate() {
        rank[element] = position + 1;
    }
    let images = (0..n)
        .map(|j| {
            let mut img = SubsetMask::empty(n);
            img.insert(rank[j]);
            for i in poset.predecessors(j) {
                img.insert(rank[i]);
            }
            img
        })
        .collect();
    Embedding::new(n, images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::check_embedding;

    fn set(m: usize, xs: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(m, xs.iter().copied()).unwrap()
    }

    fn seq(parts: &[usize]) -> PartitionSeq {
        PartitionSeq::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn layout_cells() {
        let layout = CellLayout::new(&seq(&[3, 2, 2]));
        assert_eq!(layout.boundaries(), &[0, 3, 5, 7]);
        assert_eq!(
            layout.cells().collect::<Vec<_>>(),
            vec![1..=3, 4..=5, 6..=7]
        );
    }

    #[test]
    fn two_two_family() {
        let fam = family_for_partition(4, &seq(&[2, 2])).unwrap();
        let mut expected = Vec::new();
        for low in [&[][..], &[1], &[1, 2]] {
            for high in [&[][..], &[3], &[3, 4]] {
                expected.push(set(4, &[low, high].concat()));
            }
        }
        expected.sort();
        assert_eq!(fam.iter().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn single_cell_gives_prefixes() {
        let fam = family_for_partition(5, &seq(&[5])).unwrap();
        let prefixes: Vec<_> = (0..=5)
            .map(|k| set(5, &(1..=k).collect::<Vec<_>>()))
            .collect();
        assert_eq!(fam.iter().collect::<Vec<_>>(), prefixes);
    }

    #[test]
    fn singleton_cells_give_everything() {
        assert_eq!(family_for_partition(3, &seq(&[1, 1, 1])).unwrap().len(), 8);
    }

    #[test]
    fn partition_must_match_ground_set() {
        assert!(family_for_partition(5, &seq(&[2, 2])).is_err());
        assert_eq!(
            family_for_partition_capped(4, &seq(&[1, 1, 1, 1]), 15),
            Err(Error::MemoryLimit { cap: 15 })
        );
    }

    #[test]
    fn chain_family_small() {
        assert_eq!(chain_family(3, 1, DEFAULT_FAMILY_CAP).unwrap().len(), 4);
        let fam = chain_family(4, 2, DEFAULT_FAMILY_CAP).unwrap();
        // (4): 5 sets, (3,1): 8, (2,2): 9; overlaps counted once
        let union = SetFamily::from_masks(
            4,
            [seq(&[4]), seq(&[3, 1]), seq(&[2, 2])]
                .iter()
                .flat_map(|c| {
                    family_for_partition(4, c)
                        .unwrap()
                        .iter()
                        .collect::<Vec<_>>()
                }),
        )
        .unwrap();
        assert_eq!(fam, union);
        assert!(fam.len() <= 90);
    }

    #[test]
    fn chain_family_cap() {
        assert_eq!(
            chain_family(64, 22, DEFAULT_FAMILY_CAP),
            Err(Error::MemoryLimit {
                cap: DEFAULT_FAMILY_CAP
            })
        );
        assert_eq!(
            chain_family(10, 10, 100),
            Err(Error::MemoryLimit { cap: 100 })
        );
        assert!(chain_family(3, 0, 10).is_err());
        assert!(chain_family(3, 4, 10).is_err());
    }

    #[test]
    fn wide_ground_set_uses_buffer() {
        let fam = chain_family(70, 1, DEFAULT_FAMILY_CAP).unwrap();
        assert_eq!(fam.len(), 71);
        assert!(fam.contains(&SubsetMask::full(70)));
        let fam2 = chain_family(40, 2, DEFAULT_FAMILY_CAP).unwrap();
        for mask in fam2.iter() {
            assert!(member_of_chain_family(&mask, 40, 2).unwrap());
        }
    }

    #[test]
    fn membership_examples() {
        assert!(member_of_chain_family(&set(4, &[]), 4, 1).unwrap());
        // {2} needs a cell starting at ground element 2, i.e. a first cell
        // of length 1 followed by longer cells, which weakly decreasing
        // layouts forbid.
        assert!(!member_of_chain_family(&set(4, &[2]), 4, 2).unwrap());
        assert!(member_of_chain_family(&set(4, &[2]), 4, 4).unwrap());
        assert!(member_of_chain_family(&set(4, &[1, 3]), 4, 2).unwrap());
        assert!(member_of_chain_family(&SubsetMask::full(9), 9, 2).unwrap());
        assert!(!member_of_chain_family(&set(5, &[5]), 4, 2).unwrap());
    }

    #[test]
    fn membership_limit() {
        let big = SubsetMask::empty(MAX_MEMBERSHIP_N + 1);
        assert!(matches!(
            member_of_chain_family(&big, MAX_MEMBERSHIP_N + 1, 3),
            Err(Error::Limit { .. })
        ));
    }

    #[test]
    fn bounded_antichain_examples() {
        let f = embed_bounded_antichain(&Poset::chain(3), 1).unwrap();
        assert_eq!(
            f.images(),
            &[set(3, &[1]), set(3, &[1, 2]), set(3, &[1, 2, 3])]
        );

        let p = Poset::from_relations(3, &[(0, 1)]).unwrap();
        let f = embed_bounded_antichain(&p, 2).unwrap();
        assert_eq!(f.images(), &[set(3, &[1]), set(3, &[1, 2]), set(3, &[3])]);
        assert!(check_embedding(&p, &f).is_ok());
        let layout = CellLayout::new(&seq(&[2, 1]));
        assert!(f.images().iter().all(|s| layout.is_prefix_union(s)));

        let f = embed_bounded_antichain(&Poset::antichain(4), 4).unwrap();
        assert_eq!(
            f.images(),
            &[set(4, &[1]), set(4, &[2]), set(4, &[3]), set(4, &[4])]
        );

        assert_eq!(
            embed_bounded_antichain(&Poset::antichain(3), 2),
            Err(Error::Infeasible { antichain: 3, a: 2 })
        );
    }

    #[test]
    fn bound_matches_hand_value() {
        assert_eq!(
            chain_family_bound(4, 2),
            BigRational::from_integer(90.into())
        );
        assert_eq!(
            chain_family_bound(5, 2),
            BigRational::new((7 * 2 * 49).into(), 4.into())
        );
    }

    #[test]
    fn largest_prefix_family_values() {
        assert_eq!(largest_prefix_family(4, 2), BigUint::from(9u32));
        assert_eq!(largest_prefix_family(5, 2), BigUint::from(12u32));
        assert_eq!(largest_prefix_family(3, 7), BigUint::from(8u32));
    }
}
