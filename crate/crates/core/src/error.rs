use alloc::string::String;
use core::fmt;

/// Errors raised by the core engine.
///
/// Mathematical negatives (a non-variational source form, a potential that
/// does not exist within bounds) are ordinary return values, not errors;
/// these variants cover contract violations only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A base or fiber index outside the bundle signature.
    IndexOutOfRange { index: usize, bound: usize },
    /// Invalid bundle signature (empty coordinate list or duplicate name).
    InvalidSignature(String),
    /// Numeric evaluation was asked for with an unbound symbol.
    MissingBinding(String),
    /// An operator received a form of the wrong bidegree.
    Bidegree { expected: String, found: String },
    /// Ansatz bounds that cannot span any candidate.
    InvalidBounds(String),
    /// An identity the engine relies on failed to verify; indicates a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range (bound {bound})")
            }
            Error::InvalidSignature(msg) => write!(f, "invalid bundle signature: {msg}"),
            Error::MissingBinding(sym) => write!(f, "missing binding for symbol {sym}"),
            Error::Bidegree { expected, found } => {
                write!(f, "wrong bidegree: expected {expected}, found {found}")
            }
            Error::InvalidBounds(msg) => write!(f, "invalid bounds: {msg}"),
            Error::Internal(msg) => write!(f, "internal identity check failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
