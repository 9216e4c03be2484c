use thiserror::Error;

/// Errors produced by the means kernel, divergence catalogue and inequality lab.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the formula being evaluated.
    #[error("{context}: {message}")]
    Domain {
        context: String,
        index: Option<usize>,
        message: String,
    },

    /// Two distributions over supports of different sizes were paired.
    #[error("length mismatch: {left} vs {right} support points")]
    Shape { left: usize, right: usize },

    /// Malformed distribution input.
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Caller violated a usage precondition (unsorted grid, bad step count,...).
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Domain {
            context: context.into(),
            index: None,
            message: message.into(),
        }
    }

    pub(crate) fn domain_at(
        context: impl Into<String>,
        index: usize,
        message: impl Into<String>,
    ) -> Self {
        Error::Domain {
            context: context.into(),
            index: Some(index),
            message: message.into(),
        }
    }

    /// Attaches a support index to a domain error raised by a scalar kernel.
    pub(crate) fn at_index(self, context: &str, index: usize) -> Self {
        match self {
            Error::Domain {
                index: None,
                message,
                context: inner,
            } => Error::Domain {
                context: context.to_string(),
                index: Some(index),
                message: format!("at index {index}: {inner}: {message}"),
            },
            other => other,
        }
    }

    /// Support index named by a domain error, if any.
    pub fn index(&self) -> Option<usize> {
        match self {
            Error::Domain { index, .. } => *index,
            _ => None,
        }
    }
}
