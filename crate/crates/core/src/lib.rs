//! Small universal posets inside the Boolean lattice.
//!
//! For every `n` this crate builds a family `V ⊆ 2^[n]` of roughly
//! `2^(2n/3 + O(√n))` sets such that every poset on `n` elements embeds into
//! `(V, ⊆)`, and computes certified embeddings into it:
//!
//! * posets of width at most `a = ⌈n/3⌉` go through a minimum chain
//!   decomposition into a union of per-partition prefix families
//!   ([`chain_family`]);
//! * wider posets are labelled around an antichain of size `a` and land in
//!   the sublattice `2^[n-a+ℓ]` ([`antichain`]).
//!
//! ```
//! use uniposet::{Poset, UniversalFamily};
//!
//! let family = UniversalFamily::new(9).unwrap();
//! let poset = Poset::from_relations(9, &[(0, 1), (1, 2), (3, 4)]).unwrap();
//! let out = family.embed(&poset).unwrap();
//! assert!(family.certify(&poset, &out.embedding).is_ok());
//! ```

pub mod antichain;
pub mod chain_family;
pub mod dilworth;
pub mod embedding;
pub mod error;
pub mod family;
pub mod generate;
pub mod partition;
pub mod poset;
pub mod subset;
pub mod universal;

pub use antichain::{classify, embed_with_antichain, min_ell, AntichainSplit};
pub use chain_family::{
    chain_family, chain_family_bound, embed_bounded_antichain, family_for_partition,
    member_of_chain_family, CellLayout, DEFAULT_FAMILY_CAP,
};
pub use dilworth::{
    decomposition_with_at_most, max_antichain, min_chain_decomposition, ChainDecomposition,
    ComparabilityMatching,
};
pub use embedding::{check_embedding, folklore_embed, Embedding, Violation};
pub use error::{Error, Result};
pub use family::SetFamily;
pub use generate::{
    enumerate_posets, max_antichain_bruteforce, random_poset, random_poset_with_antichain,
};
pub use partition::{hardy_ramanujan, partition_count, partitions, PartitionSeq};
pub use poset::Poset;
pub use subset::SubsetMask;
pub use universal::{
    size_bound, verify_universality, Branch, StatsRow, UniversalEmbedding, UniversalFamily,
    UniversalityReport,
};
