use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("descriptor mismatch: {0}")]
    DescriptorMismatch(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("relation violated: {0}")]
    Relation(String),
    #[error("not a unimodular monomial: {0}")]
    NotMonomial(String),
    #[error("cannot flatten: {0}")]
    Unflattenable(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
