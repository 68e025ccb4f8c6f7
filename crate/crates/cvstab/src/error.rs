use crate::scalar::Scalar;
use thiserror::Error;

/// Errors across the whole crate.
///
/// Row and mode indices in messages are 1-based, matching the text formats
/// and CLI output.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mode count mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("a vector must have at least one mode")]
    EmptyVector,

    #[error("generators {i} and {j} are not symplectically orthogonal: omega = {value}")]
    NonIsotropic { i: usize, j: usize, value: Scalar },

    #[error("generator {index} is linearly dependent on the preceding rows")]
    RankDeficient { index: usize },

    #[error("cannot span an empty list of vectors (mode count unknown)")]
    EmptySpan,

    #[error("subspace is not contained in the enclosing subspace")]
    NotASubspace,

    #[error("subspace is not isotropic")]
    NotIsotropic,

    #[error("quotient dimension {0} is odd; no hyperbolic basis exists")]
    OddQuotient(usize),

    #[error("the symplectic form is degenerate on the quotient; its radical exceeds the inner subspace")]
    DegenerateQuotient,

    #[error("logical basis is invalid: {0}")]
    InvalidLogicalBasis(String),

    #[error("inner code must encode exactly one logical mode, found {0}")]
    UnsupportedInner(usize),

    #[error("unknown builtin code `{0}`")]
    UnknownBuiltin(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("rows {i} and {j} do not commute over GF(2)")]
    BinaryNonCommuting { i: usize, j: usize },

    #[error("no sign assignment exists ({nodes} nodes searched)")]
    LiftUnsat { nodes: u64 },

    #[error("sign search exceeded the node budget of {budget}")]
    LiftBudgetExceeded { budget: u64 },

    #[error("binary logical row {index} does not commute with check row {check} over GF(2)")]
    LogicalNonCommuting { index: usize, check: usize },

    #[error("invalid error model: {0}")]
    InvalidModel(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("syndrome has {found} components but the code has {expected} generators")]
    SyndromeLength { expected: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
