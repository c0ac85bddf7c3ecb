use thiserror::Error;

/// Errors shared by all library modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error("loop edge ({0},{0}) is not allowed")]
    LoopEdge(usize),

    #[error("vertex index {index} out of range for graph with {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant failure: {0}")]
    InvariantViolation(String),

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
