use thiserror::Error;

/// Errors produced by the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input text; `pos` is a byte offset into the input.
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    /// Structurally well-formed input naming an invalid object.
    #[error("invalid forest: {0}")]
    Validity(String),

    /// Operation applied outside its domain of definition.
    #[error("domain error: {0}")]
    Domain(String),

    /// Requested size exceeds the configured bound.
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    /// Operad composition received the wrong number of arguments.
    #[error("arity mismatch: expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn bound(msg: impl Into<String>) -> Self {
        Error::BoundExceeded(msg.into())
    }
}
