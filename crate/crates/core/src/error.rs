use thiserror::Error;

/// Errors raised by enumeration, evaluation and counting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A size parameter exceeded the cap for the requested operation.
    #[error("{what}: n = {n} exceeds the cap of {cap}")]
    Size { what: &'static str, n: usize, cap: usize },
    /// Input failed validation.
    #[error("invalid input: {0}")]
    Validation(String),
    /// Term evaluation failed (missing variable, value outside the domain, ...).
    #[error("evaluation failed: {0}")]
    Evaluation(String),
    /// The operation does not apply to this kind of groupoid.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A term or groupoid description could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}
