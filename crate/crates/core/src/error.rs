use thiserror::Error;

/// Errors raised by every layer of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring context: {0}")]
    InvalidContext(String),

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown variable `{name}` at byte {offset}")]
    UnknownVariable { name: String, offset: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("ring context mismatch")]
    ContextMismatch,

    #[error("resource budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("colon by the zero polynomial")]
    ZeroColon,

    #[error("level must be at least 1, got {0}")]
    InvalidLevel(u32),

    #[error("sequence is not a permutable regular sequence: {0}")]
    NotPermutable(String),

    #[error("class is not in the annihilator of {0}")]
    NotInAnnihilator(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
