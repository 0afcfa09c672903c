use thiserror::Error;

/// Errors raised while constructing or combining signals, spike trains and
/// encoder parameters.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ValidationError {
    #[error("signal must contain at least one sample")]
    EmptySignal,
    #[error("non-finite value at index {0}")]
    NonFinite(usize),
    #[error("threshold must be positive and finite, got {0}")]
    InvalidTheta(f64),
    #[error("leak factor beta must lie in [0, 1], got {0}")]
    InvalidBeta(f64),
    #[error("leak rate alpha must be nonnegative and finite, got {0}")]
    InvalidAlpha(f64),
    #[error("times must be strictly increasing at index {0}")]
    NonIncreasingTimes(usize),
    #[error("time {0} is outside the signal domain")]
    TimeOutOfDomain(f64),
    #[error(
        "amplitude {amplitude} at index {index} is not a nonzero integer multiple of theta {theta}"
    )]
    AmplitudeOffGrid {
        index: usize,
        amplitude: f64,
        theta: f64,
    },
    #[error("segments must be contiguous: segment {index} starts at {found}, expected {expected}")]
    SegmentsNotContiguous {
        index: usize,
        expected: f64,
        found: f64,
    },
    #[error("segment {0} has nonpositive length")]
    EmptySegment(usize),
    #[error("piecewise-linear input needs at least two nodes")]
    TooFewNodes,
    #[error("incompatible time supports: {0}")]
    IncompatibleSupports(String),
    #[error("invalid experiment config: {0}")]
    InvalidConfig(String),
}

/// Errors raised by the exhaustive admissible-train search.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("enumeration exceeds the cap of {cap} spike trains")]
    CapExceeded { cap: usize },
    #[error("signal length {len} exceeds the exhaustive-search limit of {max}")]
    InfeasibleLength { len: usize, max: usize },
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

/// Errors raised by the experiment runners.
#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error(transparent)]
    Invalid(#[from] ValidationError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("writing experiment output failed: {0}")]
    Io(#[from] std::io::Error),
}
