use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generating vectors span a lattice of rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("polynomial degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero ideal is not a fractional ideal")]
    ZeroIdeal,
    #[error("characteristic polynomial {0} is reducible")]
    ReduciblePolynomial(String),
    #[error("resource budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid d: {0}")]
    InvalidD(String),
    #[error("invalid genus {0}: must be at least 2")]
    InvalidGenus(u64),
    #[error("zero vector")]
    ZeroVector,
    #[error("homomorphism does not kill relator {0}")]
    InvalidHom(usize),
    #[error("transition matrix is not primitive")]
    NotPrimitive,
    #[error("weight vector violates switch condition {0}")]
    SwitchViolation(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("abelianization of the cover has torsion {0:?}")]
    Torsion(Vec<String>),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
