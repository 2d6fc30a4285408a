use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field of size {p}^{m} exceeds the ceiling {ceiling}")]
    FieldCeiling { p: u64, m: u32, ceiling: u64 },
    #[error("invalid field specification: {0}")]
    InvalidField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("resource ceiling exceeded: {0}")]
    Ceiling(String),
    #[error("presentation is not verified")]
    NotVerified,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
