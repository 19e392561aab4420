use thiserror::Error;

/// Errors raised by parsing, precondition checks and resource caps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed graph6 input; `offset` is the byte position of the problem.
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    /// Malformed JSON input; `path` locates the offending value.
    #[error("JSON error at {path}: {message}")]
    Json { path: String, message: String },

    /// A structurally invalid graph, coloring or argument.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// An operation was called outside its documented preconditions.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A size or memory cap was exceeded.
    #[error("cap exceeded: {0}")]
    Cap(String),

    /// A search ran out of its node budget.
    #[error("search budget exceeded after {0} nodes")]
    Budget(u64),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invalid(msg.into()))
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
