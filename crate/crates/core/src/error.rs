use thiserror::Error;

/// Everything that can go wrong in `ai-core`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension must be at least 1")]
    EmptyDimension,

    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,

    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,

    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(String),

    #[error("budget must be at least 1")]
    ZeroBudget,

    #[error("multiplicity {0} is not a positive integer")]
    NonIntegralMultiplicity(String),

    #[error("work limit exceeded after {0} S-pairs")]
    WorkLimit(usize),

    #[error("generator count {count} exceeds the cap of {cap}")]
    GeneratorExplosion { count: usize, cap: usize },

    #[error("integer overflow in exact geometry")]
    Overflow,

    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("cannot infer the number of variables")]
    DimensionInference,

    #[error("empty input")]
    EmptyInput,

    #[error("sequence has no ideal at index {0}")]
    IndexOutOfRange(u64),

    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("quotient has infinite length")]
    InfiniteColength,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
