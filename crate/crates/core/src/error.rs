use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("parse error at byte {position} near `{token}`: {message}")]
    Parse {
        token: String,
        position: usize,
        message: String,
    },
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("degenerate net: {0}")]
    DegenerateNet(String),
    #[error("degenerate image: {0}")]
    DegenerateImage(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("zero input: {0}")]
    ZeroInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
