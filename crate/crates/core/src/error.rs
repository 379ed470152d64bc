use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("cannot parse `{0}` as a rational number")]
    Parse(String),

    #[error("invalid interval: lower endpoint {lo} exceeds upper endpoint {hi}")]
    InvalidInterval { lo: String, hi: String },

    #[error("unsupported root system {label}{rank}")]
    UnsupportedRootSystem { label: String, rank: usize },

    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("invalid datum: {0}")]
    InvalidDatum(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("Duistermaat-Heckman measure has zero volume")]
    DegenerateMeasure,

    #[error("2rho_P is not supported on the marked roots {i} and {j}")]
    MarkedSupport { i: usize, j: usize },

    #[error("quadrature hit a non-finite value at t = {at}")]
    EvaluationFailure { at: f64 },

    #[error("quadrature did not converge in {levels} levels (best estimate {estimate})")]
    NoConvergence { estimate: f64, levels: u32 },
}
