use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoverError {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("{what} too large for exhaustive search: {size} > {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, CoverError>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> CoverError {
    CoverError::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
