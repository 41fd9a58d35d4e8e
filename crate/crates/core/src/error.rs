use thiserror::Error;

/// Errors raised by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable mismatch: {left} vs {right}")]
    VariableMismatch { left: String, right: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,

    #[error("division by zero")]
    DivisionByZero,

    #[error("repeated pole at {0}")]
    RepeatedPole(String),

    /// The input belongs to a different family; the message names it.
    #[error("{0}")]
    Redirect(String),

    #[error("invalid case: {0}")]
    InvalidCase(String),

    #[error("certification failed: {0}")]
    NotARoot(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
