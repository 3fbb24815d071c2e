//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by fallible operations. Internal arithmetic on values that
/// were already validated (same field, same dimension) panics instead; these
/// variants are for contract violations a caller can actually commit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("scalar field mismatch")]
    FieldMismatch,
    #[error("algebra kind mismatch")]
    KindMismatch,
    #[error("axis {axis} out of range for dimension {dim}")]
    AxisOutOfRange { axis: usize, dim: usize },
    #[error("exponent out of range for {kind}: {detail}")]
    ExponentOutOfRange { kind: String, detail: String },
    #[error("char(q) mismatch: expected {expected}, field has {actual}")]
    CharMismatch { expected: u32, actual: u32 },
    #[error("unsupported for this algebra kind: {0}")]
    UnsupportedKind(String),
    #[error("unsupported in this scalar field: {0}")]
    UnsupportedField(String),
    #[error("root-of-unity order must be >= 3, got {0}")]
    BadRootOrder(u32),
    #[error("operator is not degree-homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("variant mismatch")]
    VariantMismatch,
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
