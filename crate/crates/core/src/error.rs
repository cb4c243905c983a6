use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("budget exceeded: {budget} (limit {limit})")]
    Budget { budget: &'static str, limit: u64 },
    #[error("computation cancelled")]
    Cancelled,
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// True for errors caused by exhausting a resource budget or by cancellation.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Budget { .. } | Error::Cancelled)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
