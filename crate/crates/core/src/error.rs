use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is not connected")]
    NotConnected,

    #[error("unsupported size: order {order} exceeds the limit of {limit}")]
    UnsupportedSize { order: usize, limit: usize },

    #[error("wrong diameter: expected {expected}, found {found}")]
    WrongDiameter { expected: usize, found: usize },

    /// An exact division in the characteristic polynomial recurrence left a remainder.
    #[error("arithmetic fault: {0}")]
    ArithmeticFault(String),

    /// Two independent computations of the same quantity disagreed.
    #[error("certificate failure: {0}")]
    CertificateFailure(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
