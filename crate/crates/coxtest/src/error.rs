//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by trajectory construction, statistics, simulation and I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// A time argument fell outside the observation window `[0, T]`.
    #[error("time {t} outside the observation window [0, {horizon}]")]
    TimeOutOfRange { t: f64, horizon: f64 },

    /// A trajectory violated its construction invariants.
    #[error("invalid trajectory: {0}")]
    InvalidTrajectory(String),

    /// The sample cannot support the statistics (n < 2 or mixed horizons).
    #[error("invalid sample: {0}")]
    InvalidSample(String),

    /// Normalizers vanish (no usable events); the test statistics are undefined.
    #[error("degenerate sample: {0}")]
    DegenerateSample(String),

    /// A parameter was outside its admissible range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A caller-supplied callback broke its stated contract.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// Malformed input data (CSV rows, id lists).
    #[error("data error: {0}")]
    Data(String),

    /// Underlying I/O failure.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
