use thiserror::Error;

/// Errors raised by graph construction and the verification oracles.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An exhaustive check was asked to enumerate more than its guard allows.
    #[error("refused: {0}")]
    Refused(String),

    /// An adjacency list violates the structural invariants of its type.
    #[error("malformed graph: {0}")]
    Structural(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
