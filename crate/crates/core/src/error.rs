use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed code, unknown format name, or a value a codec cannot represent.
    #[error("format error: {0}")]
    Format(String),

    /// Tensor shapes incompatible with the requested operation.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Invalid configuration (group size not dividing K, scheme mismatch, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// Input violates the 2:4 structural constraint.
    #[error("2:4 constraint violation: {0}")]
    Sparsity(String),

    /// Corrupt, truncated, or otherwise invalid model file.
    #[error("model file error: {0}")]
    File(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("header json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
