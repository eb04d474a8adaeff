use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OmError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("key polynomial must be monic of degree at least 1")]
    BadKeyPolynomial,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("division by zero in finite field")]
    DivisionByZero,
    #[error("tower level mismatch: {0} vs {1}")]
    LevelMismatch(usize, usize),
    #[error("level {0} out of range")]
    LevelOutOfRange(usize),
    #[error("polynomial {0} is not irreducible over its level")]
    Reducible(String),
    #[error("no point with finite ordinate")]
    NoFinitePoint,
    #[error("a point lies below the reference side")]
    NotAboveSide,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not separable")]
    NotSeparable,
    #[error("type is not complete")]
    IncompleteType,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unexpected variable '{0}', only x is allowed")]
    NotUnivariate(char),
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

impl OmError {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, OmError::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, OmError>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err($crate::error::OmError::Internal(format!($($fmt)+)));
        }
    };
}
pub(crate) use ensure;
