use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Transitive closure of the generating pairs forces `element ≺ element`.
    #[error("relation contains a cycle through element {element}")]
    Cycle { element: usize },

    #[error("element {element} out of range for a poset on {n} elements")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("{what} = {value} exceeds the limit of {limit}")]
    Limit {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    /// Materializing a set family would hold more than `cap` sets.
    #[error("set family exceeds the materialization cap of {cap} sets")]
    MemoryLimit { cap: usize },

    /// Exact counting needs the chain-cover family in memory.
    #[error("the family for n = {n} is predicate-only and cannot be counted exactly")]
    NotMaterialized { n: usize },

    #[error("poset has an antichain of size {antichain}, more than a = {a}")]
    Infeasible { antichain: usize, a: usize },

    #[error("elements {u} and {v} are comparable, so the set is not an antichain")]
    NotAnAntichain { u: usize, v: usize },

    #[error("antichain labelling needs an antichain of size at least 2, got {0}")]
    AntichainTooSmall(usize),

    #[error("expected {expected} elements, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
