use thiserror::Error;

/// Errors shared by the engines, the oracle and the generating-function code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("oracle limit exceeded: {letters} letters requested, limit is {limit}")]
    OracleLimit { letters: usize, limit: usize },

    #[error("resource cap exceeded: {0}")]
    Resource(String),

    #[error("count overflowed the chosen scalar type")]
    Overflow,

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("data error: {0}")]
    Data(String),

    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
