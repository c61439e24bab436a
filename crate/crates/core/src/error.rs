use thiserror::Error;

/// Errors raised by the calculators.
///
/// `InvalidParameter` marks a violated precondition (bad ranks, inadmissible
/// signatures). `Verification` marks an identity that should hold by theorem
/// but failed, which always points at a bug or a wrong convention.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameter(msg.into()))
}
