use thiserror::Error;

/// Errors raised by field, polynomial, matrix and engine operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different fields ({left} vs {right})")]
    SpecMismatch { left: String, right: String },
    #[error("field {0} is a symbolic tag and carries no element arithmetic")]
    SymbolicField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field {0} is infinite and cannot be enumerated")]
    InfiniteField(String),
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("modulus {0} is not a monic irreducible polynomial of degree >= 2")]
    InvalidModulus(String),
    #[error("element representation {0} is not canonical for this field")]
    NonCanonical(String),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("constant polynomial not allowed here")]
    ConstantPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("degree {degree} exceeds the factorization cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("coefficient size {bits} bits exceeds the factorization cap {cap}")]
    CoefficientCapExceeded { bits: u64, cap: u64 },
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("dimension {0} is too small (need n >= 2)")]
    DimensionTooSmall(usize),
    #[error("cannot embed a {from}x{from} block into {to}x{to}")]
    TargetTooSmall { from: usize, to: usize },
    #[error("length {0} is not the square of the requested dimension")]
    LengthMismatch(usize),
    #[error("matrix dimensions differ ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("not a witness: {0}")]
    NotAWitness(String),
    #[error("permutation tests disagree: hermite={hermite}, exhaustive={exhaustive}")]
    InconsistentMethods { hermite: bool, exhaustive: bool },
    #[error("gcd(m_A, g) is {0}, expected 1")]
    GcdNotOne(String),
    #[error("enumeration of {size} points exceeds the cap {cap}")]
    EnumerationCapExceeded { size: u128, cap: u128 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0} is not supported for this field")]
    Unsupported(String),
}

impl Error {
    /// True for errors that signal a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::InconsistentMethods { .. } | Error::GcdNotOne(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
