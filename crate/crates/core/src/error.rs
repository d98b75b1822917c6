use thiserror::Error;

/// Errors raised by the evaluators in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the requested operation
    /// (a pole, `Re(s) <= 1`, a zero denominator, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Working precision below [`crate::MIN_PRECISION`].
    #[error("precision {requested} is below the minimum of {minimum} bits")]
    Precision { requested: usize, minimum: usize },

    /// Text could not be parsed into the requested value type.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
