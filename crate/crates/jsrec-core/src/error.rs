use thiserror::Error;

/// Errors raised by instance construction, canonicalization, and the oracles.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid dimensions: {0}")]
    InvalidDimensions(String),

    #[error("matrix entries must be finite")]
    NonFiniteEntries,

    #[error("support size mismatch: {left} vs {right}")]
    SupportSizeMismatch { left: usize, right: usize },

    #[error("support index {index} out of range for ambient dimension {n}")]
    SupportOutOfRange { index: usize, n: usize },

    #[error("zero measurement")]
    ZeroMeasurement,

    #[error("rank tolerance must lie in (0, 1), got {0}")]
    InvalidRankTol(f64),

    #[error("infinite SNR: noise standard deviation is zero")]
    InfiniteSnr,

    #[error("signal has zero energy; cannot calibrate the requested SNR")]
    DegenerateSignal,

    #[error("brute-force spark is limited to {limit} columns, got {n}")]
    SparkTooLarge { n: usize, limit: usize },

    #[error("csv parse error at line {line}: {msg}")]
    CsvParse { line: usize, msg: String },

    #[error("metadata parse error: {0}")]
    MetaParse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
