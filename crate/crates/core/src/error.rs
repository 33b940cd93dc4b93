//! Error type shared by all modules.

/// Errors reported by construction, solving, generation and I/O.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension must be at least 1")]
    InvalidDimension,

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix is not positive definite (pivot {pivot:.6e} at row {row})")]
    NotPositiveDefinite { row: usize, pivot: f64 },

    #[error("matrix is not orthogonal (max deviation of OᵀO from identity: {defect:.6e})")]
    NotOrthogonal { defect: f64 },

    #[error("spectrum entry {index} is not strictly positive: {value}")]
    NonPositiveSpectrum { index: usize, value: f64 },

    #[error("spectrum kind {kind} requires dimension at least {minimum}, got {actual}")]
    SpectrumTooSmall {
        kind: &'static str,
        minimum: usize,
        actual: usize,
    },

    #[error("{name} = {value} is outside [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("scale must be strictly positive, got {value}")]
    NonPositiveScale { value: f64 },

    #[error("the two optima must differ")]
    IdenticalOptima,

    #[error("the Hessians are not proportional; the closed-form front does not apply")]
    NotProportional,

    #[error("axis index k = {k} violates the constraint 1 <= k <= n = {n}")]
    AxisOutOfRange { k: usize, n: usize },

    #[error("at least {minimum} samples are required, got {actual}")]
    TooFewSamples { minimum: usize, actual: usize },

    #[error("point set must be nonempty")]
    EmptyPointSet,

    #[error("grid of {size} points exceeds the budget of {budget}")]
    GridBudgetExceeded { size: u128, budget: u128 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid transform parameters: {0}")]
    InvalidTransform(String),

    #[error("unknown {what}: {got} (expected one of {expected})")]
    UnknownName {
        what: &'static str,
        got: String,
        expected: &'static str,
    },

    #[error("invalid instance descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),

    #[error("malformed front data at line {line}: {message}")]
    MalformedCsv { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
