//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AmslError {
    /// A tensor arrived with extents a layer or op cannot accept.
    #[error("dimension mismatch in {context}: expected {expected}, got {actual}")]
    DimensionMismatch {
        context: String,
        expected: String,
        actual: String,
    },

    /// NaN or infinity where finite values are required.
    #[error("non-finite value in {0}")]
    NonFinite(String),

    /// An operation was called with parameters outside its contract.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Memory addressing received a (near-)zero-norm query or item.
    #[error("degenerate memory query: {context} has norm {norm:.3e}")]
    DegenerateQuery { context: String, norm: f64 },

    /// A cache was used with a layer it did not come from.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Configuration rejected at startup (shape composition, bad ranges).
    #[error("config error: {0}")]
    Config(String),

    /// Corpus parsing / data harness failures.
    #[error("data error: {0}")]
    Data(String),

    /// Threshold calibration failures.
    #[error("calibration error: {0}")]
    Calibration(String),

    /// Checkpoint container failures (magic, version, checksum, truncation).
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    /// Training diverged or produced a non-finite loss.
    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, AmslError>;
