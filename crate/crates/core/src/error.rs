use thiserror::Error;

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands live in different rings: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    BothZero,

    #[error("{n} is not invertible: the characteristic {characteristic} divides it")]
    CharacteristicDivides { n: u64, characteristic: u64 },

    #[error("{field} has no primitive {n}-th root of unity")]
    NoRootOfUnity { n: u64, field: String },

    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{d} does not divide {n}")]
    NotDivisor { d: u64, n: u64 },

    #[error("modulus polynomial is not irreducible over the base field")]
    ReducibleModulus,

    #[error("polynomial must have degree at least {0}")]
    DegreeTooSmall(usize),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("size {size} exceeds the configured cap {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("no value assigned to variable {0}")]
    MissingAssignment(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("representation set is incomplete: sum of squared degrees {sum} != group order {order}")]
    IncompleteRepresentations { sum: usize, order: usize },

    #[error("{0} is not an element of the group")]
    UnknownElement(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("unsupported request: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl AlgebraError {
    pub fn parse(msg: impl Into<String>) -> Self {
        AlgebraError::Parse(msg.into())
    }

    pub fn is_parse_error(&self) -> bool {
        matches!(self, AlgebraError::Parse(_))
    }
}
