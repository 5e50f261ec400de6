//! Embeddings of posets that contain a large antichain.
//!
//! Given an antichain `A` of size `a ≥ 2`, the other elements split into
//! those below some element of `A` (numbered `1..=b`) and the rest (numbered
//! `b+ℓ+1 ..= n-a+ℓ`). Antichain elements get distinct `⌊ℓ/2⌋`-subsets of the
//! label window `[b+1, b+ℓ]`, where `ℓ` is the least width with
//! `C(ℓ, ⌊ℓ/2⌋) ≥ a`. The whole poset then embeds into `2^[n-a+ℓ]`.

use std::ops::RangeInclusive;

use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::subset::SubsetMask;

/// `C(n, k)` for the small arguments used here.
fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Least `ℓ ≥ 0` with `C(ℓ, ⌊ℓ/2⌋) ≥ a`.
pub fn min_ell(a: usize) -> usize {
    (0..)
        .find(|&ell| binomial(ell, ell / 2) >= a as u128)
        .expect("central binomials are unbounded")
}

/// `k`-subsets of `{0, …, width-1}` as bit masks in colexicographic order,
/// which for masks is plain numeric order. Gosper's hack.
fn colex_subsets(width: usize, k: usize) -> impl Iterator<Item = u128> {
    let limit = 1u128 << width;
    let first = if k == 0 { 0 } else { (1u128 << k) - 1 };
    std::iter::successors(Some(first), move |&s| {
        if s == 0 {
            return None;
        }
        let low = s & s.wrapping_neg();
        let ripple = s + low;
        Some((((ripple ^ s) >> 2) / low) | ripple)
    })
    .take_while(move |&s| s < limit)
}

/// The three-way split of a poset around an antichain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntichainSplit {
    /// Elements outside the antichain lying below some antichain element,
    /// ascending. Element `below[i]` gets ground element `i + 1`.
    pub below: Vec<usize>,
    /// Antichain elements ascending, each with its label: `⌊ℓ/2⌋` ground
    /// elements of `[b+1, b+ℓ]`, ascending.
    pub antichain: Vec<(usize, Vec<usize>)>,
    /// Remaining elements, ascending. Element `above[j]` gets ground
    /// element `b + ℓ + j + 1`.
    pub above: Vec<usize>,
    pub ell: usize,
}

impl AntichainSplit {
    /// `b`, the number of elements below the antichain.
    pub fn b(&self) -> usize {
        self.below.len()
    }

    /// Ground elements reserved for antichain labels.
    pub fn label_window(&self) -> RangeInclusive<usize> {
        self.b() + 1..=self.b() + self.ell
    }

    /// `n - a + ℓ`.
    pub fn ground_size(&self) -> usize {
        self.b() + self.ell + self.above.len()
    }

    /// Checks the split invariants against the poset.
    pub fn validate(&self, poset: &Poset) -> Result<()> {
        let n = poset.len();
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        let mut seen = vec![false; n];
        let all = self
            .below
            .iter()
            .chain(self.antichain.iter().map(|(y, _)| y))
            .chain(&self.above);
        for &e in all {
            if e >= n || std::mem::replace(&mut seen[e], true) {
                return bad(format!("element {e} out of range or repeated"));
            }
        }
        if seen.iter().any(|s| !s) {
            return bad("split does not cover every element".into());
        }
        let ys: Vec<usize> = self.antichain.iter().map(|&(y, _)| y).collect();
        if let Some((u, v)) = poset.comparable_pair_in(&ys) {
            return Err(Error::NotAnAntichain { u, v });
        }
        for &x in &self.below {
            if !ys.iter().any(|&y| poset.less(x, y)) {
                return bad(format!("element {x} is not below the antichain"));
            }
            if let Some(&y) = ys.iter().find(|&&y| poset.less(y, x)) {
                return bad(format!(
                    "below element {x} sits above antichain element {y}"
                ));
            }
        }
        for &z in &self.above {
            if let Some(&y) = ys.iter().find(|&&y| poset.less(z, y)) {
                return bad(format!(
                    "above element {z} sits below antichain element {y}"
                ));
            }
        }
        let window = self.label_window();
        let half = self.ell / 2;
        let mut labels: Vec<&Vec<usize>> = Vec::new();
        for (y, label) in &self.antichain {
            if label.len() != half || !label.iter().all(|e| window.contains(e)) {
                return bad(format!("label of {y} is not a {half}-subset of {window:?}"));
            }
            labels.push(label);
        }
        labels.sort();
        labels.dedup();
        if labels.len() != self.antichain.len() {
            return bad("antichain labels are not distinct".into());
        }
        Ok(())
    }
}

/// Splits the poset around the antichain `antichain` (any order, no
/// repeats, at least two elements).
pub fn classify(poset: &Poset, antichain: &[usize]) -> Result<AntichainSplit> {
    let n = poset.len();
    if antichain.len() < 2 {
        return Err(Error::AntichainTooSmall(antichain.len()));
    }
    let mut ys = antichain.to_vec();
    ys.sort_unstable();
    if let Some(&e) = ys.iter().find(|&&e| e >= n) {
        return Err(Error::ElementOutOfRange { element: e, n });
    }
    if ys.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument(
            "antichain lists an element twice".into(),
        ));
    }
    if let Some((u, v)) = poset.comparable_pair_in(&ys) {
        return Err(Error::NotAnAntichain { u, v });
    }

    let mut in_antichain = vec![false; n];
    for &y in &ys {
        in_antichain[y] = true;
    }
    let (below, above): (Vec<usize>, Vec<usize>) = (0..n)
        .filter(|&x| !in_antichain[x])
        .partition(|&x| ys.iter().any(|&y| poset.less(x, y)));

    let ell = min_ell(ys.len());
    let b = below.len();
    let labels = colex_subsets(ell, ell / 2).map(|mask| {
        (0..ell)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| b + 1 + i)
            .collect::<Vec<_>>()
    });
    let antichain: Vec<(usize, Vec<usize>)> = ys.into_iter().zip(labels).collect();

    let split = AntichainSplit {
        below,
        antichain,
        above,
        ell,
    };
    debug_assert_eq!(split.validate(poset), Ok(()));
    Ok(split)
}

/// Embeds the poset into `2^[n-a+ℓ]` around the antichain.
///
/// With below elements `x_i`, antichain elements `y_S` and the rest `z_j`:
///
/// * `f(x_i) = {i' ≤ b : x_i' ⪯ x_i}`
/// * `f(y_S) = {i ≤ b : x_i ⪯ y_S} ∪ S ∪ {j : y_S ⋠ z_j}`
/// * `f(z_j) = {i ≤ b : x_i ⪯ z_j} ∪ [b+1, b+ℓ] ∪ {j' : z_j ⋠ z_j'}`
pub fn embed_with_antichain(poset: &Poset, antichain: &[usize]) -> Result<Embedding> {
    let split = classify(poset, antichain)?;
    Ok(embed_split(poset, &split))
}

/// The embedding for an already computed split.
pub fn embed_split(poset: &Poset, split: &AntichainSplit) -> Embedding {
    let n = poset.len();
    let m = split.ground_size();
    let b = split.b();
    let top_base = b + split.ell;

    let below_part = |v: usize| {
        let mut img = SubsetMask::empty(m);
        for (i, &x) in split.below.iter().enumerate() {
            if poset.leq(x, v) {
                img.insert(i + 1);
            }
        }
        img
    };
    let unrelated_tops = |img: &mut SubsetMask, v: usize| {
        for (j, &z) in split.above.iter().enumerate() {
            if !poset.leq(v, z) {
                img.insert(top_base + j + 1);
            }
        }
    };

    let mut images: Vec<Option<SubsetMask>> = vec![None; n];
    for &x in &split.below {
        images[x] = Some(below_part(x));
    }
    for (y, label) in &split.antichain {
        let mut img = below_part(*y);
        for &e in label {
            img.insert(e);
        }
        unrelated_tops(&mut img, *y);
        images[*y] = Some(img);
    }
    for &z in &split.above {
        let mut img = below_part(z);
        for e in split.label_window() {
            img.insert(e);
        }
        unrelated_tops(&mut img, z);
        images[z] = Some(img);
    }
    let images = images
        .into_iter()
        .map(|img| img.expect("the split covers every element"))
        .collect();
    Embedding::new(m, images).expect("all images built over [m]")
}
