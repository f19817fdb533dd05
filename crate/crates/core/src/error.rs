use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual input; `offset` is a byte offset for graph6 and a
    /// 1-based line number for the line-oriented formats.
    #[error("parse error at {location} {offset}: {message}")]
    Parse {
        location: &'static str,
        offset: usize,
        message: String,
    },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid argument: {0}")]
    Validation(String),
    /// A documented precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Contract(String),
    #[error("input too large: {0}")]
    TooLarge(String),
}

impl Error {
    pub(crate) fn byte(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            location: "byte",
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn line(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            location: "line",
            offset: line,
            message: message.into(),
        }
    }
}
