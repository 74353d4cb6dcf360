//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("shape error: {0}")]
    ShapeError(String),
    #[error("index error: {0}")]
    IndexError(String),
    #[error("degree error: {0}")]
    DegreeError(String),
    #[error("unsupported degree {0}: representations exist for degrees 1 through 5")]
    UnsupportedDegree(u32),
    #[error("the zero polynomial needs an explicit degree")]
    AmbiguousDegree,
    #[error("niceness is decided over the generic symbolic coefficient ring only")]
    RequiresSymbolicRing,
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

impl Error {
    pub fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    /// Byte offset of a syntax error, when there is one.
    pub fn offset(&self) -> Option<usize> {
        match self {
            Error::Parse { offset, .. } => Some(*offset),
            _ => None,
        }
    }
}
