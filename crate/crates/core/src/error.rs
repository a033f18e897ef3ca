use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("{0}")]
    Domain(String),

    #[error("tuple is not upper: entry {value} at index {index} is below its index")]
    NotUpper { index: usize, value: usize },

    /// The request is well-formed but the operation declines to answer it,
    /// for example a determinant that is not guaranteed to be correct.
    #[error("refused: {0}")]
    Refused(String),

    #[error("n = {n} exceeds the brute-force cap of {cap}")]
    OverCap { n: usize, cap: usize },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
