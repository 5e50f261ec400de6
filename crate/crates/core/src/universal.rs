//! A subfamily of `2^[n]` containing every `n`-element poset.
//!
//! The family is the union of the chain-cover family over `[n]` with width
//! budget `a` (default `⌈n/3⌉`) and the whole lattice `2^[m]`, where
//! `m = n - a + ℓ` and `ℓ` is the antichain label width for `a`. Posets of
//! width at most `a` land in the first part; wider posets are labelled
//! around an antichain of size `a` and land in the second.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::antichain::{embed_with_antichain, min_ell};
use crate::chain_family::{
    chain_family, embed_bounded_antichain, member_of_chain_family, DEFAULT_FAMILY_CAP,
    MAX_MEMBERSHIP_N,
};
use crate::dilworth::max_antichain;
use crate::embedding::{check_embedding, folklore_embed, Embedding, Violation};
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::generate::enumerate_posets;
use crate::partition::partition_count;
use crate::poset::Poset;
use crate::subset::SubsetMask;

/// Largest `n` for [`verify_universality`].
pub const MAX_VERIFY_N: usize = 5;

/// `⌈n/3⌉`.
pub fn default_width_budget(n: usize) -> usize {
    n.div_ceil(3)
}

/// How the chain-cover part of the family is held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExplicitPart {
    /// `a < 2`: the antichain labelling does not apply and the whole
    /// lattice `2^[n]` is used instead.
    FullLattice,
    Materialized(SetFamily),
    /// Too large to materialize under the cap; membership is computed.
    Predicate,
}

/// Which construction produced an embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    FullLattice,
    ChainCover,
    AntichainLabels,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::FullLattice => "full-lattice",
            Branch::ChainCover => "chain-cover",
            Branch::AntichainLabels => "antichain-labels",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalFamily {
    n: usize,
    a: usize,
    ell: usize,
    m: usize,
    explicit: ExplicitPart,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalEmbedding {
    pub embedding: Embedding,
    pub branch: Branch,
}

/// Why an embedding is not a certificate for a universal family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateError {
    GroundSet { expected: usize, actual: usize },
    Order(Violation),
    NotMember { element: usize, image: SubsetMask },
}

impl fmt::Display for CertificateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateError::GroundSet { expected, actual } => {
                write!(
                    f,
                    "embedding uses ground set [{actual}], expected [{expected}]"
                )
            }
            CertificateError::Order(v) => write!(f, "not order-faithful: {v}"),
            CertificateError::NotMember { element, image } => {
                write!(
                    f,
                    "image {{{image}}} of element {element} is not in the family"
                )
            }
        }
    }
}

impl UniversalFamily {
    /// The family for `n` with `a = ⌈n/3⌉` and the default cap.
    pub fn new(n: usize) -> Result<UniversalFamily> {
        Self::build(n, default_width_budget(n), DEFAULT_FAMILY_CAP)
    }

    /// The family for `n` with width budget `a`, never materialized.
    /// Embedding and membership work as usual; counting does not.
    pub fn lazy(n: usize, a: usize) -> Result<UniversalFamily> {
        Self::build(n, a, 0)
    }

    /// The family for `n` with width budget `a`, materializing the
    /// chain-cover part when it holds at most `cap` sets.
    pub fn build(n: usize, a: usize, cap: usize) -> Result<UniversalFamily> {
        if n == 0 || a == 0 || a > n {
            return Err(Error::InvalidArgument(format!(
                "need 1 <= a <= n, got n = {n}, a = {a}"
            )));
        }
        let ell = min_ell(a);
        if a < 2 {
            return Ok(UniversalFamily {
                n,
                a,
                ell,
                m: n,
                explicit: ExplicitPart::FullLattice,
            });
        }
        let explicit = match chain_family(n, a, cap) {
            Ok(family) => ExplicitPart::Materialized(family),
            Err(Error::MemoryLimit { .. }) if n <= MAX_MEMBERSHIP_N => ExplicitPart::Predicate,
            Err(Error::MemoryLimit { .. }) => {
                return Err(Error::Limit {
                    what: "universal family size",
                    value: n,
                    limit: MAX_MEMBERSHIP_N,
                })
            }
            Err(e) => return Err(e),
        };
        Ok(UniversalFamily {
            n,
            a,
            ell,
            m: n - a + ell,
            explicit,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Width budget.
    pub fn a(&self) -> usize {
        self.a
    }

    /// Antichain label width.
    pub fn ell(&self) -> usize {
        self.ell
    }

    /// The lattice part is `2^[m]`.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn explicit_part(&self) -> &ExplicitPart {
        &self.explicit
    }

    pub fn is_materialized(&self) -> bool {
        !matches!(self.explicit, ExplicitPart::Predicate)
    }

    /// Membership of a subset of `[n]`.
    pub fn contains(&self, set: &SubsetMask) -> bool {
        if !set.fits_within(self.n) {
            return false;
        }
        if set.fits_within(self.m) {
            return true;
        }
        match &self.explicit {
            ExplicitPart::FullLattice => true,
            ExplicitPart::Materialized(family) => family.contains(set),
            ExplicitPart::Predicate => member_of_chain_family(set, self.n, self.a)
                .expect("build checked n against the membership limit"),
        }
    }

    /// Exact size: `|explicit| + 2^m - |explicit ∩ 2^[m]|`.
    pub fn cardinality(&self) -> Result<BigUint> {
        let lattice = BigUint::one() << self.m;
        match &self.explicit {
            ExplicitPart::FullLattice => Ok(lattice),
            ExplicitPart::Materialized(family) => {
                Ok(lattice + BigUint::from(family.len() - family.count_within(self.m)))
            }
            ExplicitPart::Predicate => Err(Error::NotMaterialized { n: self.n }),
        }
    }

    /// Embeds `poset` into the family.
    pub fn embed(&self, poset: &Poset) -> Result<UniversalEmbedding> {
        if poset.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                actual: poset.len(),
            });
        }
        let outcome = if matches!(self.explicit, ExplicitPart::FullLattice) {
            UniversalEmbedding {
                embedding: folklore_embed(poset),
                branch: Branch::FullLattice,
            }
        } else {
            let antichain = max_antichain(poset);
            if antichain.len() <= self.a {
                UniversalEmbedding {
                    embedding: embed_bounded_antichain(poset, self.a)?,
                    branch: Branch::ChainCover,
                }
            } else {
                let labelled = embed_with_antichain(poset, &antichain[..self.a])?;
                debug_assert_eq!(labelled.ground_size(), self.m);
                UniversalEmbedding {
                    embedding: labelled.widened(self.n)?,
                    branch: Branch::AntichainLabels,
                }
            }
        };
        debug_assert_eq!(self.certify(poset, &outcome.embedding), Ok(()));
        Ok(outcome)
    }

    /// Full check of an embedding: ground set `[n]`, order-faithful, and
    /// every image a member of the family.
    pub fn certify(&self, poset: &Poset, embedding: &Embedding) -> Result<(), CertificateError> {
        if embedding.ground_size() != self.n {
            return Err(CertificateError::GroundSet {
                expected: self.n,
                actual: embedding.ground_size(),
            });
        }
        check_embedding(poset, embedding).map_err(CertificateError::Order)?;
        for (element, image) in embedding.images().iter().enumerate() {
            if !self.contains(image) {
                return Err(CertificateError::NotMember {
                    element,
                    image: image.clone(),
                });
            }
        }
        Ok(())
    }
}

/// `p(n)·a·(⌈n/a⌉+1)^a + 2^(n-a+ℓ)` with `a = ⌈n/3⌉`: the chain-cover
/// bound plus the lattice part, before any asymptotics.
pub fn size_bound(n: usize) -> BigUint {
    let a = default_width_budget(n).max(1);
    let chain_part =
        partition_count(n) * BigUint::from(a) * BigUint::from(n.div_ceil(a) + 1).pow(a as u32);
    chain_part + (BigUint::one() << (n - a + min_ell(a)))
}

/// Outcome of embedding every labeled poset of one size.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UniversalityReport {
    pub n: usize,
    pub total: usize,
    pub passed: usize,
    /// Posets whose embedding failed to certify. Expected empty.
    pub failures: Vec<(Poset, String)>,
    pub full_lattice: usize,
    pub chain_cover: usize,
    pub antichain_labels: usize,
}

impl UniversalityReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty() && self.passed == self.total
    }
}

impl fmt::Display for UniversalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "total={}", self.total)?;
        writeln!(f, "passed={}", self.passed)?;
        writeln!(f, "failed={}", self.failures.len())?;
        writeln!(f, "full_lattice={}", self.full_lattice)?;
        writeln!(f, "chain_cover={}", self.chain_cover)?;
        writeln!(f, "antichain_labels={}", self.antichain_labels)?;
        for (poset, why) in &self.failures {
            writeln!(f, "failure: {why}\n{poset}")?;
        }
        writeln!(f, "{}/{}", self.passed, self.total)
    }
}

/// Embeds and certifies every labeled poset on `n ≤ 5` elements.
pub fn verify_universality(n: usize) -> Result<UniversalityReport> {
    if n > MAX_VERIFY_N {
        return Err(Error::Limit {
            what: "exhaustive verification size",
            value: n,
            limit: MAX_VERIFY_N,
        });
    }
    let family = UniversalFamily::new(n)?;
    let mut report = UniversalityReport {
        n,
        ..Default::default()
    };
    for poset in enumerate_posets(n)? {
        report.total += 1;
        let verdict = family
            .embed(&poset)
            .map_err(|e| e.to_string())
            .and_then(|out| {
                family
                    .certify(&poset, &out.embedding)
                    .map(|()| out.branch)
                    .map_err(|e| e.to_string())
            });
        match verdict {
            Ok(branch) => {
                report.passed += 1;
                match branch {
                    Branch::FullLattice => report.full_lattice += 1,
                    Branch::ChainCover => report.chain_cover += 1,
                    Branch::AntichainLabels => report.antichain_labels += 1,
                }
            }
            Err(why) => report.failures.push((poset, why)),
        }
    }
    Ok(report)
}

/// Size figures for one `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct StatsRow {
    pub n: usize,
    pub a: usize,
    pub ell: usize,
    pub m: usize,
    /// `None` when the family is too large to count.
    pub cardinality: Option<BigUint>,
    pub size_bound: BigUint,
    pub pow2_n: BigUint,
}

impl StatsRow {
    pub fn compute(n: usize, a: usize, cap: usize) -> Result<StatsRow> {
        let family = UniversalFamily::build(n, a, cap)?;
        Ok(StatsRow {
            n,
            a: family.a(),
            ell: family.ell(),
            m: family.m(),
            cardinality: family.cardinality().ok(),
            size_bound: size_bound(n),
            pow2_n: BigUint::one() << n,
        })
    }

    /// `log2(cardinality) / n`.
    pub fn ratio_bits(&self) -> Option<f64> {
        self.cardinality.as_ref().map(|c| log2(c) / self.n as f64)
    }

    /// `(log2(cardinality) - 2n/3) / √n`, the empirical constant in the
    /// `2^(2n/3 + C√n)` size law.
    pub fn excess_per_sqrt_n(&self) -> Option<f64> {
        let n = self.n as f64;
        self.cardinality
            .as_ref()
            .map(|c| (log2(c) - 2.0 * n / 3.0) / n.sqrt())
    }
}

fn log2(x: &BigUint) -> f64 {
    // Keep 53 significant bits and shift the rest into the exponent.
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_f64().expect("fits in f64");
    top.log2() + shift as f64
}

/// One line of `key=value` pairs.
impl fmt::Display for StatsRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} a={} ell={} m={} ",
            self.n, self.a, self.ell, self.m
        )?;
        match &self.cardinality {
            Some(c) => write!(f, "cardinality={c} ")?,
            None => write!(f, "cardinality=predicate-only ")?,
        }
        write!(f, "size_bound={} pow2_n={} ", self.size_bound, self.pow2_n)?;
        match (self.ratio_bits(), self.excess_per_sqrt_n()) {
            (Some(r), Some(c)) => write!(f, "ratio_bits={r:.6} excess_per_sqrt_n={c:.6}"),
            _ => write!(f, "ratio_bits=- excess_per_sqrt_n=-"),
        }
    }
}
