//! Error type shared by every module.

use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("unsupported type: {0}")]
    UnsupportedType(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("enumeration exceeded cap of {0} elements")]
    CapExceeded(usize),
    #[error("weight is not dominant integral: {0}")]
    NotDominant(String),
    #[error("k has a center; use the Hermitian decomposition")]
    HasCenter,
    #[error("datum is not Hermitian")]
    NotHermitian,
    #[error("weights live on different charts")]
    ChartMismatch,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

/// Result alias.
pub type Result<T> = std::result::Result<T, Error>;
