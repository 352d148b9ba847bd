use thiserror::Error;

/// Errors raised by the numerical laboratory.
#[derive(Debug, Error)]
pub enum ZetaError {
    #[error("zeta has a simple pole at s = 1")]
    PoleAtOne,
    #[error("gamma has a pole at the nonpositive integer {0}")]
    PoleAtNonpositiveInteger(i64),
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("li(x^rho) needs a non-real rho; use li_real on the real axis")]
    BranchError,
    #[error("quadrature failed: {0}")]
    QuadratureFailure(String),
    #[error("sieve limit {requested} exceeds the supported maximum {max}")]
    CapacityExceeded { requested: u64, max: u64 },
    #[error("argument {value} outside the table range (limit {limit})")]
    OutOfRange { value: f64, limit: u64 },
    #[error("zero count audit failed near height {height}: {detail}")]
    MissedZeroSuspected { height: f64, detail: String },
    #[error("format error: {0}")]
    FormatError(String),
    #[error("input not strictly increasing at entry {index}")]
    NonMonotonicInput { index: usize },
    #[error("not enough zeros: {0}")]
    InsufficientZeros(String),
    #[error("not enough data: {0}")]
    InsufficientData(String),
    #[error("derivative vanishes at {0}")]
    DerivativeVanishes(String),
    #[error("iteration hit the pole at s = 1")]
    PoleEncountered,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, ZetaError>;
