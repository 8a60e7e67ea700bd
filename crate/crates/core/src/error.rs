use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported holonomy spec: {0}")]
    UnsupportedSpec(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
}

pub type Result<T> = std::result::Result<T, Error>;
