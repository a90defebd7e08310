use thiserror::Error;

/// Failure while reading a polynomial in the shared text grammar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A documented precondition of an operation does not hold for the input.
    #[error("precondition violated ({result}): {detail}")]
    Precondition {
        result: &'static str,
        detail: String,
    },

    #[error("linear system is incompatible")]
    Incompatible,

    /// Something that the theory rules out happened; indicates a bug or bad input data.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn precondition(result: &'static str, detail: impl Into<String>) -> Self {
        Error::Precondition {
            result,
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
