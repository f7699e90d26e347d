use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the operation's domain.
    InvalidArgument(String),
    /// Malformed family string or input text.
    Parse { input: String, reason: String },
    /// An explicit construction or DP table would exceed the configured cap.
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: usize,
    },
    /// A method does not apply to the given family shape.
    Inapplicable { method: &'static str, family: String },
    /// A ratio formula hit a zero denominator.
    UndefinedRatio(String),
    /// An identity evaluated inside its excluded domain.
    Undefined(String),
    /// Something that must hold mathematically did not.
    InvariantViolation(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Parse { input, reason } => write!(f, "cannot parse {input:?}: {reason}"),
            Error::CapExceeded { what, size, cap } => {
                write!(f, "{what} has size {size}, exceeding the cap of {cap}")
            }
            Error::Inapplicable { method, family } => {
                write!(f, "method {method} does not apply to family {family}")
            }
            Error::UndefinedRatio(msg) => write!(f, "undefined ratio: {msg}"),
            Error::Undefined(msg) => write!(f, "undefined: {msg}"),
            Error::InvariantViolation(msg) => write!(f, "invariant violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
