use thiserror::Error;

use crate::parser::ParseError;

/// Errors raised by the algebra engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: [{left}] vs [{right}]")]
    RingMismatch { left: String, right: String },

    #[error("exponent vectors of different lengths ({0} vs {1})")]
    ArityMismatch(usize, usize),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("point does not lie on the variety: generator {0} does not vanish")]
    NotOnVariety(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("cycle group definition, line {line}: {message}")]
    CycleFormat { line: usize, message: String },

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
