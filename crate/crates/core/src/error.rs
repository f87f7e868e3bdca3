use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("element {element} does not belong to {group}")]
    ElementOutsideGroup { element: String, group: String },

    #[error("group mismatch: {left} vs {right}")]
    SpecMismatch { left: String, right: String },

    #[error("unsupported group {group}: {reason}")]
    UnsupportedSpec { group: String, reason: String },

    #[error("not a subsequence: multiplicity of {element} would become negative")]
    NotSubsequence { element: String },

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An inconsistent modular system; would contradict the uniqueness result.
    #[error("counterexample: {0}")]
    Counterexample(String),

    #[error("search budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
}
