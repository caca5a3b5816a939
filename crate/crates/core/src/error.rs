use thiserror::Error;

/// Errors raised by the library.
///
/// The variants fall into three families, mirrored by [`Error::exit_code`]:
/// bad input, a resource guard that refused to run, and an internal
/// consistency failure (an identity that must hold did not).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("polynomial is zero: {0} is undefined")]
    ZeroPolynomial(&'static str),

    #[error("size guard exceeded: {what} = {value} > {bound}")]
    GuardExceeded {
        what: &'static str,
        value: String,
        bound: String,
    },

    #[error("division is not exact")]
    NonExactDivision,

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn inconsistent(msg: impl Into<String>) -> Self {
        Error::Inconsistent(msg.into())
    }

    /// Process exit code for this error: 2 input, 3 guard, 4 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::ZeroPolynomial(_) => 2,
            Error::GuardExceeded { .. } => 3,
            Error::NonExactDivision | Error::Inconsistent(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
