use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum FeqError {
    #[error("element dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("operation requires a finite group (free rank must be 0)")]
    InfiniteGroup,

    #[error("objects belong to different groups")]
    GroupMismatch,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("evaluation failed: {0}")]
    Evaluation(String),

    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, FeqError>;
