use thiserror::Error;

/// Errors raised by the exact-arithmetic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter `{0}` must be nonzero")]
    ZeroParameter(&'static str),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("hypergeometric pole: (b1)_r vanishes at r = {r} before the numerator terminates")]
    Pole { r: usize },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("surds over different radicands cannot be combined ({0} vs {1})")]
    IncompatibleRadicands(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
