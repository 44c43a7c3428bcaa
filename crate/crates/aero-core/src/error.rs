//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by any aero-core operation.
#[derive(Debug, Error)]
pub enum AeroError {
    /// Tensor shapes do not line up for the requested operation.
    #[error("shape mismatch in {op}: expected {expected}, got {got}")]
    ShapeMismatch {
        op: &'static str,
        expected: String,
        got: String,
    },

    /// An argument violated its documented range or contract.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A non-finite value appeared where the contract requires finite math.
    #[error("non-finite value encountered in {stage}")]
    NonFinite { stage: String },

    /// Run-configuration file or override problem.
    #[error("config error: {0}")]
    Config(String),

    /// Malformed input data (CSV row, checkpoint record, ...).
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, AeroError>;

impl AeroError {
    pub(crate) fn shape(op: &'static str, expected: impl Into<String>, got: impl Into<String>) -> Self {
        AeroError::ShapeMismatch {
            op,
            expected: expected.into(),
            got: got.into(),
        }
    }
}
