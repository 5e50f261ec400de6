//! Integer partitions: streaming enumeration, exact counts, and the
//! Hardy–Ramanujan leading term.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionSeq {
    parts: Vec<usize>,
}

impl PartitionSeq {
    pub fn new(parts: Vec<usize>) -> Result<PartitionSeq> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(
                "partition parts must be positive".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(PartitionSeq { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The partitioned integer.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for PartitionSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Partitions of `n` into at most `max_parts` parts, in reverse
/// lexicographic order starting from `(n)`.
pub fn partitions(n: usize, max_parts: usize) -> Partitions {
    let first = if n == 0 {
        Some(Vec::new())
    } else if max_parts == 0 {
        None
    } else {
        Some(vec![n])
    };
    Partitions {
        max_parts: max_parts.min(n.max(1)),
        next: first,
    }
}

/// Iterator returned by [`partitions`].
#[derive(Clone, Debug)]
pub struct Partitions {
    max_parts: usize,
    next: Option<Vec<usize>>,
}

impl Partitions {
    /// The next smaller partition: keep the longest prefix possible, lower
    /// one part by one and refill the tail greedily, provided the tail fits
    /// in the remaining part budget.
    fn advance(&self, cur: &[usize]) -> Option<Vec<usize>> {
        let mut tail_sum = 0;
        for i in (0..cur.len()).rev() {
            let lowered = cur[i] - 1;
            let rest = tail_sum + 1;
            tail_sum += cur[i];
            if lowered == 0 {
                continue;
            }
            let needed = rest.div_ceil(lowered);
            if i + 1 + needed > self.max_parts {
                continue;
            }
            let mut out = cur[..i].to_vec();
            out.push(lowered);
            let mut left = rest;
            while left > 0 {
                let part = left.min(lowered);
                out.push(part);
                left -= part;
            }
            return Some(out);
        }
        None
    }
}

impl Iterator for Partitions {
    type Item = PartitionSeq;

    fn next(&mut self) -> Option<PartitionSeq> {
        let cur = self.next.take()?;
        self.next = self.advance(&cur);
        Some(PartitionSeq { parts: cur })
    }
}

/// `p(0), …, p(n)` by Euler's pentagonal number recurrence
/// `p(k) = Σ_{j≥1} (-1)^{j+1} [p(k - j(3j-1)/2) + p(k - j(3j+1)/2)]`.
pub fn partition_counts(n: usize) -> Vec<BigUint> {
    let mut table: Vec<BigUint> = Vec::with_capacity(n + 1);
    table.push(BigUint::one());
    for k in 1..=n {
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > k {
                break;
            }
            let acc = if j % 2 == 1 { &mut plus } else { &mut minus };
            *acc += &table[k - g1];
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= k {
                *acc += &table[k - g2];
            }
        }
        table.push(plus - minus);
    }
    table
}

/// The partition number `p(n)`, exact.
pub fn partition_count(n: usize) -> BigUint {
    partition_counts(n).pop().expect("table holds p(0)..=p(n)")
}

/// Leading term `exp(π √(2n/3)) / (4 √3 n)` of the partition asymptotics.
/// A sanity check on [`partition_count`], never used to compute it.
pub fn hardy_ramanujan(n: usize) -> f64 {
    let n = n as f64;
    (PI * (2.0 * n / 3.0).sqrt()).exp() / (4.0 * 3f64.sqrt() * n)
}
