use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            message: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
