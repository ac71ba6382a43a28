use thiserror::Error;

/// Errors produced by matroid construction, search and file handling.
#[derive(Debug, Error)]
pub enum Error {
    #[error("validation failed: {0}")]
    Validation(String),

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("operation would leave an empty ground set")]
    EmptyGroundSet,

    #[error("rank {rank} is too low for this operation")]
    RankTooLow { rank: usize },

    #[error("ground sets differ in size ({left} vs {right})")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("ground set of {n} elements exceeds the limit of {limit}")]
    GroundSetTooLarge { n: usize, limit: usize },

    #[error("search budget of {budget} nodes exceeded")]
    SearchBudgetExceeded { budget: u64 },

    #[error("erection family has no unique maximum under the weak order")]
    MaximalityViolation,

    #[error("column {column} is the zero functional")]
    ZeroFunctional { column: usize },

    #[error("minor search requires a simple target matroid")]
    TargetNotSimple,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("{path}: {source}")]
    File { path: String, source: Box<Error> },
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn in_file(self, path: impl Into<String>) -> Self {
        Error::File {
            path: path.into(),
            source: Box::new(self),
        }
    }

    /// Whether the error comes from reading or parsing input rather than
    /// from the content failing a check.
    pub fn is_input_error(&self) -> bool {
        match self {
            Error::Io(_) | Error::Format { .. } => true,
            Error::File { source, .. } => source.is_input_error(),
            _ => false,
        }
    }

    pub(crate) fn format(line: usize, msg: impl Into<String>) -> Self {
        Error::Format {
            line,
            message: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
