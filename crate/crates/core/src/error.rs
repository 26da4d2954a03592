use thiserror::Error;

/// Failure modes shared by every computation in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The coupled pair has no stable ground state (α₁(0)·α₂(0) ≥ 1).
    #[error("instability: {0}")]
    Instability(String),

    #[error("divergent integral in {operation}: {detail}")]
    Divergent {
        operation: &'static str,
        detail: String,
    },

    #[error("numerical failure in {operation}: {detail}")]
    NumericalFailure {
        operation: &'static str,
        detail: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
