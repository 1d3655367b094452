//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by construction, preprocessing and analysis routines.
#[derive(Debug, Error)]
pub enum Error {
    /// A vector element violated the strict-positivity domain requirement.
    #[error("element {index} is {value}, but all elements must be strictly positive and finite")]
    NonPositiveElement { index: usize, value: f64 },

    /// An operation received an empty vector.
    #[error("empty vector")]
    EmptyVector,

    /// An operation needs more input elements than it received.
    #[error("needs at least {needed} elements, got {got}")]
    TooFewElements { needed: usize, got: usize },

    /// A parameter combination outside an operation's documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The SNE/SI identity is singular on all-equal vectors (ln SI = 0).
    #[error("singular identity: all elements equal, ln(SI) = 0")]
    SingularIdentity,

    /// A band specification outside [0, fs/2] or with low >= high.
    #[error("invalid band [{low}, {high}] Hz for Nyquist {nyquist} Hz")]
    InvalidBand { low: f64, high: f64, nyquist: f64 },

    /// The band-filtered envelope carries no usable energy.
    #[error("degenerate envelope: {0}")]
    DegenerateEnvelope(String),

    /// Baseline statistics cannot be formed (zero variance or too short).
    #[error("degenerate baseline: {0}")]
    DegenerateBaseline(String),

    /// Input signal shorter than an operation requires.
    #[error("signal too short: needs at least {needed} samples, got {got}")]
    SignalTooShort { needed: usize, got: usize },

    /// A point's dimensionality does not match the fitted model.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Structural violation of a dataset file layout.
    #[error("format error in {path}: {reason}")]
    Format { path: String, reason: String },

    /// A dataset directory yielded no usable files.
    #[error("empty run: {0}")]
    EmptyRun(String),

    /// An index evaluation hit a numerically degenerate denominator.
    #[error("degenerate evaluation: {0}")]
    DegenerateEvaluation(String),

    /// Filesystem-level failure while reading a dataset.
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
