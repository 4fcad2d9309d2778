use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("partition ({inner}) is not contained in ({outer})")]
    NotContained { outer: String, inner: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integer overflow")]
    Overflow,

    #[error("weight has total {weight} but the shape has {cells} cells")]
    SizeMismatch { weight: usize, cells: usize },

    #[error("tableau is not semistandard")]
    NotSemistandard,

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),
}

pub type Result<T> = std::result::Result<T, Error>;
