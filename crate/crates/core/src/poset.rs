//! Finite posets stored as their strict, transitively closed order relation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::subset::{iter_bits, set_bit, test_bit, words_for};

/// A partial order on the elements `0..n`.
///
/// Only the strict relation `≺` is stored; `leq` adds the diagonal. Rows are
/// bit vectors: bit `v` of `succ[u]` is set iff `u ≺ v`, and `pred` holds
/// the transpose.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    stride: usize,
    succ: Vec<u64>,
    pred: Vec<u64>,
}

impl Poset {
    /// Transitive closure of the generator pairs `u ≺ v`.
    ///
    /// Duplicate and redundant pairs are fine. Fails with [`Error::Cycle`]
    /// if the closure would make some element strictly below itself.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "a poset needs at least one element".into(),
            ));
        }
        let stride = words_for(n);
        let mut succ = vec![0u64; n * stride];
        for &(u, v) in pairs {
            for e in [u, v] {
                if e >= n {
                    return Err(Error::ElementOutOfRange { element: e, n });
                }
            }
            if u == v {
                return Err(Error::Cycle { element: u });
            }
            set_bit(&mut succ[u * stride..(u + 1) * stride], v);
        }

        // Warshall over bit rows; a row picking up its own bit is a cycle.
        for k in 0..n {
            let row_k = succ[k * stride..(k + 1) * stride].to_vec();
            for i in 0..n {
                let row_i = &mut succ[i * stride..(i + 1) * stride];
                if test_bit(row_i, k) {
                    for (dst, src) in row_i.iter_mut().zip(&row_k) {
                        *dst |= src;
                    }
                    if test_bit(row_i, i) {
                        return Err(Error::Cycle { element: i });
                    }
                }
            }
        }
        Ok(Self::from_closed_rows(n, succ))
    }

    /// Builds a poset from already-closed successor rows.
    pub(crate) fn from_closed_rows(n: usize, succ: Vec<u64>) -> Poset {
        let stride = words_for(n);
        debug_assert_eq!(succ.len(), n * stride);
        let mut pred = vec![0u64; n * stride];
        for u in 0..n {
            for v in iter_bits(&succ[u * stride..(u + 1) * stride]) {
                set_bit(&mut pred[v * stride..(v + 1) * stride], u);
            }
        }
        let poset = Poset {
            n,
            stride,
            succ,
            pred,
        };
        debug_assert!(poset.check_axioms().is_ok(), "{:?}", poset.check_axioms());
        poset
    }

    /// The chain `0 ≺ 1 ≺ … ≺ n-1`.
    pub fn chain(n: usize) -> Poset {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_relations(n, &pairs).expect("a chain is acyclic")
    }

    /// `n` pairwise incomparable elements.
    pub fn antichain(n: usize) -> Poset {
        Self::from_relations(n, &[]).expect("the empty relation is a partial order")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Strict order `u ≺ v`.
    #[inline]
    pub fn less(&self, u: usize, v: usize) -> bool {
        test_bit(self.succ_row(u), v)
    }

    /// Reflexive order `u ⪯ v`.
    #[inline]
    pub fn leq(&self, u: usize, v: usize) -> bool {
        u == v || self.less(u, v)
    }

    #[inline]
    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.leq(u, v) || self.less(v, u)
    }

    /// Elements strictly above `u`, ascending.
    pub fn successors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.succ_row(u))
    }

    /// Elements strictly below `v`, ascending.
    pub fn predecessors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.pred_row(v))
    }

    pub(crate) fn succ_row(&self, u: usize) -> &[u64] {
        &self.succ[u * self.stride..(u + 1) * self.stride]
    }

    pub(crate) fn pred_row(&self, v: usize) -> &[u64] {
        &self.pred[v * self.stride..(v + 1) * self.stride]
    }

    /// All pairs `(u, v)` with `u ≺ v`, lexicographic.
    pub fn strict_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.successors(u).map(move |v| (u, v)))
    }

    /// Cover pairs: `u ≺ v` with nothing strictly between. Lexicographic.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        self.strict_pairs()
            .filter(|&(u, v)| !self.successors(u).any(|w| self.less(w, v)))
            .collect()
    }

    /// Checks irreflexivity, antisymmetry and transitivity of the stored relation.
    pub fn check_axioms(&self) -> Result<()> {
        for u in 0..self.n {
            if self.less(u, u) {
                return Err(Error::Cycle { element: u });
            }
            for v in self.successors(u) {
                if self.less(v, u) {
                    return Err(Error::Cycle { element: u });
                }
                for w in self.successors(v) {
                    if !self.less(u, w) {
                        return Err(Error::InvalidArgument(format!(
                            "not transitive: {u} < {v} < {w} but not {u} < {w}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// True iff the given elements are pairwise incomparable.
    pub fn is_antichain(&self, elements: &[usize]) -> bool {
        self.comparable_pair_in(elements).is_none()
    }

    pub(crate) fn comparable_pair_in(&self, elements: &[usize]) -> Option<(usize, usize)> {
        for (i, &u) in elements.iter().enumerate() {
            for &v in &elements[i + 1..] {
                if self.comparable(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("n", &self.n)
            .field("covers", &self.cover_pairs())
            .finish()
    }
}

/// Text form: the element count on the first line, then one `u < v` line
/// per cover pair in lexicographic order.
impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for (u, v) in self.cover_pairs() {
            writeln!(f, "{u} < {v}")?;
        }
        Ok(())
    }
}

/// Parses the text form. Blank lines and lines starting with `#` are
/// skipped; any generator pairs are accepted, not only cover pairs.
impl FromStr for Poset {
    type Err = Error;

    fn from_str(text: &str) -> Result<Poset> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (first, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing element count"))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::parse(first, format!("expected element count, got {header:?}")))?;

        let mut pairs = Vec::new();
        for (line, body) in lines {
            let (u, v) = body
                .split_once('<')
                .ok_or_else(|| Error::parse(line, format!("expected `u < v`, got {body:?}")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line, format!("bad element {:?}", s.trim())))
            };
            pairs.push((parse(u)?, parse(v)?));
        }
        Poset::from_relations(n, &pairs)
    }
}
