use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors shared by every module of the crate.
///
/// The variants follow the failure classes the command line distinguishes:
/// malformed input, violated preconditions, resource caps and internal
/// consistency checks.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A complex or map is missing data or refers to cells that do not exist.
    #[error("structural error: {0}")]
    Structural(String),

    /// An operation was called outside the hypotheses it is proven under.
    #[error("contract violated: {0}")]
    Contract(String),

    /// Malformed arguments (index out of range, arithmetic preconditions).
    #[error("invalid argument: {0}")]
    Argument(String),

    /// An enumeration would exceed a configured cap.
    #[error("resource cap exceeded: {what} needs {needed}, cap is {cap}")]
    Resource {
        what: String,
        needed: usize,
        cap: usize,
    },

    /// A derived structure turned out to be ill defined.
    #[error("consistency error: {0}")]
    Consistency(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }

    pub(crate) fn resource(what: impl Into<String>, needed: usize, cap: usize) -> Self {
        Error::Resource {
            what: what.into(),
            needed,
            cap,
        }
    }
}
