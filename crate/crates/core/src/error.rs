use thiserror::Error;

/// Errors raised by module constructions and checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("label {0} is outside the index range of the module")]
    OutOfRange(String),

    #[error("eigenspace of sum x_i d_i at {0} is empty")]
    EmptyModule(String),

    #[error("{0} is not injective on the module, cannot localize")]
    NotOreInjective(String),

    #[error("index {index} out of range for {what}")]
    Range { what: &'static str, index: usize },

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Machine-readable code used by the CLI report.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Dimension { .. } => "dimension",
            Error::Validation(_) => "validation",
            Error::OutOfRange(_) => "out_of_range",
            Error::EmptyModule(_) => "empty_module",
            Error::NotOreInjective(_) => "not_ore_injective",
            Error::Range { .. } => "range",
            Error::Unsupported(_) => "unsupported",
            Error::Syntax { .. } => "syntax",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
