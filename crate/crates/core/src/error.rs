use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("coefficient overflow in polynomial product")]
    CoefficientOverflow,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("pattern with {k} vertices exceeds the supported maximum of {max}")]
    PatternTooLarge { k: usize, max: usize },

    #[error("k must be even, got {0}")]
    OddK(usize),

    #[error("pattern has {pattern} vertices but the instance has {instance} sets")]
    SizeMismatch { pattern: usize, instance: usize },

    #[error("{0}")]
    Format(String),
}

impl Error {
    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidParameter(message.into())
    }
}
