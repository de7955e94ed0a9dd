use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A construction parameter is out of its documented domain.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// An argument's dimensions disagree with what the operation expects.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A text artifact (model file, netlist, PBM, manifest) failed to parse.
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Training produced a non-finite loss.
    #[error("training diverged: {0}")]
    Diverged(String),
}

impl Error {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub(crate) fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse { offset, msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
