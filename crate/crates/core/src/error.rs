use thiserror::Error;

/// Errors produced by constructors, parsers and checked entry points.
///
/// Arithmetic on values that were constructed for the wrong ring is a
/// programming error and panics instead; see the individual operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid ring selector: {0}")]
    InvalidRing(String),

    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: String, found: String },

    #[error("modulus must be monic")]
    NotMonic,

    #[error("modulus must have degree at least 1")]
    DegreeZero,

    #[error("degree {degree} is not below the required bound {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },

    #[error("no embedding of {from} into {to}")]
    NoEmbedding { from: String, to: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown strategy '{0}' (expected naive, kronecker or regular)")]
    UnknownStrategy(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
