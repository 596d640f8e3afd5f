use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("presentation mismatch: {0}")]
    PresentationMismatch(String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("degree {degree} is outside the range 0..={cap}")]
    DegreeOutOfRange { degree: usize, cap: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("degree cap {cap} is too small, need at least {needed}")]
    CapTooSmall { cap: usize, needed: usize },

    #[error("not enough integral degree-1 classes: need {needed}, have {available}")]
    NotEnoughClasses { needed: usize, available: usize },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}
