use thiserror::Error;

/// Errors raised by the solver and its building blocks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("system is not zero-dimensional (P and Q share a common factor)")]
    NotZeroDimensional,
    #[error("bad separating parameter: {0}")]
    BadParameter(String),
    #[error("variety is empty")]
    EmptyVariety,
    #[error("polynomial is not invertible modulo the given modulus")]
    NotInvertible,
    #[error("{0}: zero polynomial not allowed")]
    ZeroPolynomial(&'static str),
    #[error("duplicate interpolation node {0}")]
    DuplicateNode(String),
    #[error("invalid degrees: {0}")]
    InvalidDegrees(String),
    #[error("interval does not isolate a root")]
    NotIsolating,
    #[error("root index {0} out of range")]
    InvalidRootIndex(usize),
    #[error("no admissible separating form found")]
    NoSeparatingForm,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    /// Stable machine-readable code used in JSON output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotZeroDimensional => "NotZeroDimensional",
            Error::BadParameter(_) => "BadParameter",
            Error::EmptyVariety => "EmptyVariety",
            Error::NotInvertible => "NotInvertible",
            Error::ZeroPolynomial(_) => "ZeroPolynomial",
            Error::DuplicateNode(_) => "DuplicateNode",
            Error::InvalidDegrees(_) => "InvalidDegrees",
            Error::NotIsolating => "NotIsolating",
            Error::InvalidRootIndex(_) => "InvalidRootIndex",
            Error::NoSeparatingForm => "NoSeparatingForm",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Parse { .. } => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
