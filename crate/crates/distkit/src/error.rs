//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("not a proper point set: {0}")]
    NotProperPointSet(String),
    #[error("not spherical: {0}")]
    NotSpherical(String),
    #[error("not concyclic: {0}")]
    NotConcyclic(String),
    #[error("profile too rich: {0}")]
    ProfileTooRich(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("weight construction failed: {0}")]
    WeightConstructionFailed(String),
    #[error("strength mismatch: {0}")]
    StrengthMismatch(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    #[error("verification mismatch: {0}")]
    VerificationMismatch(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
