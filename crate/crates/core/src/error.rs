use core::fmt;

/// Errors reported by the layout engines and their helpers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    InvalidArgument(&'static str),
    /// The input does not satisfy a structural precondition (for example a
    /// spoke set that is not well-separated).
    Precondition(&'static str),
    /// A caller-supplied contract between components was broken.
    Contract(&'static str),
    /// An internal invariant did not hold. This is a bug, not bad input.
    Invariant(&'static str),
    /// The request is valid but outside what the operation supports.
    Unsupported(&'static str),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::Contract(msg) => write!(f, "contract violation: {msg}"),
            Error::Invariant(msg) => write!(f, "internal invariant failed: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
