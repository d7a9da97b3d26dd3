use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("x = {0} lies outside [-1/2, 1/2]")]
    DomainViolation(f64),
    #[error("window is not real-valued")]
    NotRealValued,
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("invalid xi: {0}")]
    InvalidXi(String),
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("c1 must be positive, got {0}")]
    NonPositiveC1(f64),
    #[error("c2 must be nonnegative, got {0}")]
    NegativeC2(f64),
    #[error("inconsistent Toeplitz flags: {0}")]
    InconsistentFlags(String),
    #[error("window has no certified sup norm")]
    UnboundedWindow,
    #[error("Kadec perturbation delta = {0} must lie in [0, 1/4)")]
    DeltaTooLarge(f64),
    #[error("witness exponent t = {0} must exceed 1/4")]
    TNotAdmissible(f64),
    #[error("sample set {0} has no points in the truncation window")]
    EmptySampleSet(usize),
    #[error("{got} samples cannot determine {needed} unknowns")]
    InsufficientSamples { got: usize, needed: usize },
    #[error("forward matrix is rank deficient (sigma_min = {0:e})")]
    RankDeficient(f64),
    #[error("size {size} exceeds the matrix cap {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("invalid argument `{field}`: {msg}")]
    InvalidArgument { field: String, msg: String },
}

impl Error {
    /// Failures of the numerics rather than of the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::RankDeficient(_))
    }
}
