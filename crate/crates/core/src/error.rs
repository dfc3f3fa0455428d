use thiserror::Error;

/// Errors raised by the library. Every variant maps onto exit code 2 (invalid
/// input) in the CLI except [`Error::Internal`] and [`Error::Mismatch`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected} variables, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("the degree of the zero polynomial is undefined")]
    ZeroPolynomial,

    #[error("monomial {0} is not squarefree")]
    NotSquarefree(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("degenerate coefficient vector: {0}")]
    Degenerate(String),

    #[error("verification mismatch: {0}")]
    Mismatch(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
