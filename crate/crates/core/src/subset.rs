//! Subsets of a ground set `[m] = {1, …, m}` stored as bit vectors.
//!
//! Ground element `i` lives at bit `i - 1`, so comparing masks as unsigned
//! integers puts ground element 1 in the least significant position.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// Compares two equal-length word slices as little-endian unsigned integers.
#[inline]
pub(crate) fn cmp_words(a: &[u64], b: &[u64]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

#[inline]
pub(crate) fn words_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

#[inline]
pub(crate) fn test_bit(words: &[u64], bit: usize) -> bool {
    words[bit / WORD_BITS] >> (bit % WORD_BITS) & 1 == 1
}

#[inline]
pub(crate) fn set_bit(words: &mut [u64], bit: usize) {
    words[bit / WORD_BITS] |= 1 << (bit % WORD_BITS);
}

#[inline]
pub(crate) fn clear_bit(words: &mut [u64], bit: usize) {
    words[bit / WORD_BITS] &= !(1 << (bit % WORD_BITS));
}

/// Iterates the indices of set bits in ascending order.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * WORD_BITS + bit)
        })
    })
}

/// A subset of `[m]`.
///
/// Invariant: no bit at position `>= m` is set, and the word vector has
/// exactly `ceil(m / 64)` entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    m: usize,
    words: Vec<u64>,
}

impl SubsetMask {
    pub fn empty(m: usize) -> Self {
        SubsetMask {
            m,
            words: vec![0; words_for(m)],
        }
    }

    /// The whole ground set `[m]`.
    pub fn full(m: usize) -> Self {
        let mut mask = Self::empty(m);
        mask.words.fill(u64::MAX);
        mask.trim();
        mask
    }

    /// Builds a mask from 1-indexed ground elements. Repeats are ignored.
    pub fn from_elements<I>(m: usize, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut mask = Self::empty(m);
        for e in elements {
            if e == 0 || e > m {
                return Err(Error::InvalidArgument(format!(
                    "ground element {e} outside [1, {m}]"
                )));
            }
            mask.insert(e);
        }
        Ok(mask)
    }

    pub(crate) fn from_words(m: usize, words: &[u64]) -> Self {
        debug_assert_eq!(words.len(), words_for(m));
        let mask = SubsetMask {
            m,
            words: words.to_vec(),
        };
        debug_assert!(mask.is_trimmed());
        mask
    }

    /// Size of the ground set this mask lives in.
    pub fn ground_size(&self) -> usize {
        self.m
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Membership of the 1-indexed ground element `e`.
    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.m && test_bit(&self.words, e - 1)
    }

    /// Adds the 1-indexed ground element `e`.
    ///
    /// Panics if `e` is not in `[1, m]`.
    pub fn insert(&mut self, e: usize) {
        assert!(
            e >= 1 && e <= self.m,
            "ground element {e} outside [1, {}]",
            self.m
        );
        set_bit(&mut self.words, e - 1);
    }

    pub fn remove(&mut self, e: usize) {
        if e >= 1 && e <= self.m {
            clear_bit(&mut self.words, e - 1);
        }
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Subset test. Masks over different ground sets compare by content.
    pub fn is_subset(&self, other: &SubsetMask) -> bool {
        let common = self.words.len().min(other.words.len());
        words_subset(&self.words[..common], &other.words[..common])
            && self.words[common..].iter().all(|&w| w == 0)
    }

    /// 1-indexed elements in ascending order.
    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        iter_bits(&self.words).map(|b| b + 1)
    }

    pub fn max_element(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * WORD_BITS + (WORD_BITS - w.leading_zeros() as usize))
    }

    /// True iff every element is at most `bound`.
    pub fn fits_within(&self, bound: usize) -> bool {
        self.max_element().is_none_or(|e| e <= bound)
    }

    /// Re-homes the mask in ground set `[m]`.
    ///
    /// Fails if some element exceeds `m`.
    pub fn with_ground_size(&self, m: usize) -> Result<SubsetMask> {
        if !self.fits_within(m) {
            return Err(Error::InvalidArgument(format!(
                "subset with maximum element {} does not fit in [{m}]",
                self.max_element().unwrap_or(0)
            )));
        }
        let mut words = self.words.clone();
        words.resize(words_for(m), 0);
        Ok(SubsetMask { m, words })
    }

    /// Parses the text form used in family and embedding files:
    /// comma-separated ascending elements, or `-` for the empty set.
    pub fn parse(m: usize, text: &str) -> Result<SubsetMask> {
        let text = text.trim();
        if text == "-" {
            return Ok(Self::empty(m));
        }
        let mut mask = Self::empty(m);
        let mut last = 0;
        for piece in text.split(',') {
            let e: usize = piece
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad ground element {piece:?}")))?;
            if e <= last {
                return Err(Error::InvalidArgument(format!(
                    "elements must be strictly ascending, got {e} after {last}"
                )));
            }
            if e > m {
                return Err(Error::InvalidArgument(format!(
                    "ground element {e} outside [1, {m}]"
                )));
            }
            mask.insert(e);
            last = e;
        }
        Ok(mask)
    }

    fn trim(&mut self) {
        let rem = self.m % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    fn is_trimmed(&self) -> bool {
        self.fits_within(self.m)
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        let width = self.words.len().max(other.words.len());
        let word = |w: &[u64], i: usize| w.get(i).copied().unwrap_or(0);
        for i in (0..width).rev() {
            match word(&self.words, i).cmp(&word(&other.words, i)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        self.m.cmp(&other.m)
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in self.elements() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        if first {
            f.write_str("-")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}⊆[{}]", self.m)
    }
}
