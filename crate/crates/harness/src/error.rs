use diskcover::CoverError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("schema error at `{field}`: {reason}")]
    Schema { field: String, reason: String },

    #[error("bad value at `{field}`: {reason}")]
    Value { field: String, reason: String },

    #[error("size limit: {0}")]
    SizeLimit(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid solution: {0}")]
    Invalid(String),
}

impl HarnessError {
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Usage(_) | HarnessError::Io { .. } => 2,
            HarnessError::Schema { .. } | HarnessError::Value { .. } | HarnessError::Invalid(_) => 3,
            HarnessError::SizeLimit(_) => 4,
        }
    }

    pub(crate) fn schema(field: impl Into<String>, reason: impl Into<String>) -> Self {
        HarnessError::Schema {
            field: field.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn value(field: impl Into<String>, reason: impl Into<String>) -> Self {
        HarnessError::Value {
            field: field.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        HarnessError::Io {
            path: path.display().to_string(),
            source,
        }
    }
}

impl From<CoverError> for HarnessError {
    fn from(e: CoverError) -> Self {
        match e {
            CoverError::TooLarge { .. } => HarnessError::SizeLimit(e.to_string()),
            CoverError::InvalidInstance(m) => HarnessError::value("instance", m),
            CoverError::InvalidParameter { name, reason } => HarnessError::Usage(format!("{name}: {reason}")),
            CoverError::Precondition(m) => HarnessError::Usage(m),
        }
    }
}

pub type Result<T> = std::result::Result<T, HarnessError>;
