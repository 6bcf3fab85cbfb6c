use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generators have gcd {0}, not a numerical semigroup")]
    NotNumerical(u64),
    #[error("empty generator list")]
    Empty,
    #[error("{0} is not a nonzero element of the semigroup")]
    NotMember(u64),
    #[error("genus {requested} exceeds the configured ceiling {ceiling}")]
    BoundExceeded { requested: usize, ceiling: usize },
    #[error("exponent vector has {got} entries, ring has {expected} variables")]
    ArityMismatch { expected: usize, got: usize },
    #[error("zero polynomial where a nonzero one is required")]
    ZeroInput,
    #[error("quotient is not finite-dimensional over the field")]
    InfiniteDimensional,
    #[error("dimension bounds need genus at least 2, got {0}")]
    GenusTooSmall(usize),
    #[error("semigroup <{0}> is not in the reference table")]
    UnknownLabel(String),
    #[error("unknown export format `{0}`")]
    UnknownFormat(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid coefficient field: {0}")]
    InvalidField(String),
    #[error("computation exceeded its budget of {0:?}")]
    TimedOut(std::time::Duration),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
