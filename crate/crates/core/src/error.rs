use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left_rows}x{left_cols} times {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix of size {0} exceeds the supported maximum of 8")]
    TooLarge(usize),
    #[error("matrix has {entries} entries, expected {rows}x{cols}")]
    BadShape {
        rows: usize,
        cols: usize,
        entries: usize,
    },
    #[error("non-finite value in input")]
    NonFinite,
    #[error("eigenvalue iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("cannot normalize a vector of norm {0:e}")]
    ZeroVector(f64),
    #[error("state is not normalized (norm {0})")]
    NotNormalized(f64),
    #[error("invalid subsystem selector: {0}")]
    InvalidSelector(String),
    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),
    #[error("numerical consistency failure: {what} (value {value:e})")]
    Consistency { what: &'static str, value: f64 },
    #[error("{name} = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("overlap <initial|final> = {re} + {im}i does not equal cos(theta/2) = {expected}")]
    OverlapMismatch { re: f64, im: f64, expected: f64 },
    #[error("initial and final states coincide; no evolution to parameterize")]
    IdenticalStates,
    #[error("unsupported unitary dimension {0} (expected 4 or 8)")]
    UnsupportedDimension(usize),
    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("sample {index} = {value} lies outside [0, 1]")]
    SampleOutOfRange { index: usize, value: f64 },
    #[error("sample {index}: {source}")]
    Sample {
        index: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("could not build worker pool: {0}")]
    WorkerPool(String),
}
