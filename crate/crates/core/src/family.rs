//! Sorted, deduplicated families of subsets of `[m]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::subset::{cmp_words, words_for, SubsetMask};

/// A set family over `[m]`, kept sorted by mask value with no repeats.
///
/// Masks are stored back to back, `stride` words each, so a family of a
/// few million small sets stays compact.
#[derive(Clone, PartialEq, Eq)]
pub struct SetFamily {
    m: usize,
    stride: usize,
    words: Vec<u64>,
}

impl SetFamily {
    pub fn empty(m: usize) -> SetFamily {
        SetFamily {
            m,
            stride: family_stride(m),
            words: Vec::new(),
        }
    }

    /// Collects, sorts and deduplicates masks over `[m]`.
    pub fn from_masks<I>(m: usize, masks: I) -> Result<SetFamily>
    where
        I: IntoIterator<Item = SubsetMask>,
    {
        let mut words = Vec::new();
        for mask in masks {
            if mask.ground_size() != m {
                return Err(Error::InvalidArgument(format!(
                    "mask over [{}] in a family over [{m}]",
                    mask.ground_size()
                )));
            }
            words.extend_from_slice(mask.words());
            if mask.words().is_empty() {
                words.push(0);
            }
        }
        Ok(Self::from_unsorted_words(m, words))
    }

    pub(crate) fn from_unsorted_words(m: usize, words: Vec<u64>) -> SetFamily {
        let stride = family_stride(m);
        SetFamily {
            m,
            stride,
            words: sort_dedup(stride, words),
        }
    }

    pub(crate) fn from_sorted_words(m: usize, words: Vec<u64>) -> SetFamily {
        let family = SetFamily {
            m,
            stride: family_stride(m),
            words,
        };
        debug_assert!(family.is_strictly_sorted());
        family
    }

    pub fn ground_size(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.words.len() / self.stride
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn chunk(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }

    /// The `i`-th smallest member.
    pub fn get(&self, i: usize) -> SubsetMask {
        SubsetMask::from_words(self.m, &self.chunk(i)[..words_for(self.m)])
    }

    pub fn iter(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        (0..self.len()).map(|i| self.get(i))
    }

    /// Binary search membership. Masks over another ground set are compared
    /// by content.
    pub fn contains(&self, mask: &SubsetMask) -> bool {
        if !mask.fits_within(self.m) {
            return false;
        }
        let mut probe = mask.words().to_vec();
        probe.resize(self.stride, 0);
        self.search(&probe).is_ok()
    }

    fn search(&self, probe: &[u64]) -> std::result::Result<usize, usize> {
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            match cmp_words(self.chunk(mid), probe) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Ok(mid),
            }
        }
        Err(lo)
    }

    /// Number of members contained in `[bound]`.
    pub fn count_within(&self, bound: usize) -> usize {
        if bound >= self.m {
            return self.len();
        }
        // Members ⊆ [bound] are exactly the masks below 2^bound, a prefix of
        // the sorted order.
        let mut probe = vec![0u64; self.stride];
        crate::subset::set_bit(&mut probe, bound);
        match self.search(&probe) {
            Ok(i) | Err(i) => i,
        }
    }

    fn is_strictly_sorted(&self) -> bool {
        (1..self.len()).all(|i| cmp_words(self.chunk(i - 1), self.chunk(i)) == Ordering::Less)
    }
}

/// Words per stored member; the empty ground set still takes one word so
/// that `{∅}` is representable.
pub(crate) fn family_stride(m: usize) -> usize {
    words_for(m).max(1)
}

fn sort_dedup(stride: usize, mut words: Vec<u64>) -> Vec<u64> {
    match stride {
        1 => {
            words.sort_unstable();
            words.dedup();
            words
        }
        _ => {
            let mut chunks: Vec<&[u64]> = words.chunks_exact(stride).collect();
            chunks.sort_unstable_by(|a, b| cmp_words(a, b));
            chunks.dedup();
            chunks.concat()
        }
    }
}

/// Sorted, duplicate-free accumulation of masks with a size cap.
pub(crate) struct FamilyBuilder {
    m: usize,
    stride: usize,
    cap: usize,
    store: Store,
}

enum Store {
    /// One bit per subset of `[m]`; used when `2^m` bits are affordable.
    Bitmap { bits: Vec<u64>, count: usize },
    /// Raw masks, compacted whenever the buffer grows past `compact_at`.
    Buffer { words: Vec<u64>, compact_at: usize },
}

/// Largest ground set deduplicated through a bitmap (2 MiB).
const BITMAP_MAX_M: usize = 24;

impl FamilyBuilder {
    pub(crate) fn new(m: usize, cap: usize) -> FamilyBuilder {
        let stride = family_stride(m);
        let store = if m <= BITMAP_MAX_M {
            Store::Bitmap {
                bits: vec![0; words_for(1 << m)],
                count: 0,
            }
        } else {
            Store::Buffer {
                words: Vec::new(),
                compact_at: 2 * cap.clamp(1 << 16, 1 << 26) * stride,
            }
        };
        FamilyBuilder {
            m,
            stride,
            cap,
            store,
        }
    }

    pub(crate) fn insert(&mut self, mask: &[u64]) -> Result<()> {
        match &mut self.store {
            Store::Bitmap { bits, count } => {
                let value = mask.first().copied().unwrap_or(0) as usize;
                let word = &mut bits[value / 64];
                let bit = 1u64 << (value % 64);
                if *word & bit == 0 {
                    *word |= bit;
                    *count += 1;
                    if *count > self.cap {
                        return Err(Error::MemoryLimit { cap: self.cap });
                    }
                }
            }
            Store::Buffer { words, compact_at } => {
                words.extend_from_slice(mask);
                if words.len() >= *compact_at {
                    *words = sort_dedup(self.stride, std::mem::take(words));
                    if words.len() / self.stride > self.cap {
                        return Err(Error::MemoryLimit { cap: self.cap });
                    }
                    *compact_at = (*compact_at).max(2 * words.len());
                }
            }
        }
        Ok(())
    }

    pub(crate) fn finish(self) -> Result<SetFamily> {
        let family = match self.store {
            Store::Bitmap { bits, .. } => {
                let words = crate::subset::iter_bits(&bits).map(|v| v as u64).collect();
                SetFamily::from_sorted_words(self.m, words)
            }
            Store::Buffer { words, .. } => SetFamily::from_unsorted_words(self.m, words),
        };
        if family.len() > self.cap {
            return Err(Error::MemoryLimit { cap: self.cap });
        }
        Ok(family)
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SetFamily")
            .field("m", &self.m)
            .field("len", &self.len())
            .finish()
    }
}

/// Text form: header `m=<m> count=<k>`, then one member per line in sorted
/// order, written as comma-separated 1-indexed elements or `-` for ∅.
impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "m={} count={}", self.m, self.len())?;
        for set in self.iter() {
            writeln!(f, "{set}")?;
        }
        Ok(())
    }
}

impl FromStr for SetFamily {
    type Err = Error;

    fn from_str(text: &str) -> Result<SetFamily> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let (hl, header) = lines
            .by_ref()
            .find(|(_, l)| !l.is_empty())
            .ok_or_else(|| Error::parse(1, "missing header"))?;
        let mut fields = header.split_whitespace();
        let mut field = |key: &str| -> Result<usize> {
            fields
                .next()
                .and_then(|f| f.strip_prefix(key))
                .and_then(|f| f.strip_prefix('='))
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| {
                    Error::parse(
                        hl,
                        format!("header must be `m=<m> count=<k>`, got {header:?}"),
                    )
                })
        };
        let m = field("m")?;
        let count = field("count")?;

        let stride = family_stride(m);
        let mut words: Vec<u64> = Vec::with_capacity(count * stride);
        let mut members = 0;
        for (line, body) in lines.filter(|(_, l)| !l.is_empty()) {
            let set = SubsetMask::parse(m, body).map_err(|e| Error::parse(line, e.to_string()))?;
            let mut chunk = set.words().to_vec();
            chunk.resize(stride, 0);
            if members > 0 && cmp_words(&words[(members - 1) * stride..], &chunk) != Ordering::Less
            {
                return Err(Error::parse(line, "members must be strictly increasing"));
            }
            words.extend_from_slice(&chunk);
            members += 1;
        }
        if members != count {
            return Err(Error::parse(
                hl,
                format!("header says count={count}, found {members}"),
            ));
        }
        Ok(SetFamily::from_sorted_words(m, words))
    }
}
