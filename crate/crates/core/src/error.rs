use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("n = {n} exceeds the brute-force oracle cap of {cap}")]
    OracleCapExceeded { n: usize, cap: usize },

    #[error("endpoint-restricted counts are defined only for n >= 1")]
    EmptyRestricted,

    #[error("adjacency bound m must be at least 1")]
    InvalidBound,

    #[error("threshold {0} is out of range for m = {1}")]
    ThresholdOutOfRange(u32, u32),

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("denominator has zero constant term; no power series at 0")]
    NonUnitConstantTerm,

    #[error("series coefficient {0} is not an integer")]
    NonIntegralSeries(usize),

    #[error("singular block for component {0}")]
    SingularBlock(usize),

    #[error("component classification mismatch: {0}")]
    Classification(String),

    #[error("component {0} is acyclic")]
    AcyclicComponent(usize),

    #[error("evaluation point must be positive, got {0}")]
    NonPositivePoint(f64),

    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),

    #[error("invalid m-list: {0}")]
    InvalidMList(String),

    #[error("{0}")]
    Usage(String),
}
