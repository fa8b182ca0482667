use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("modulus {0:?} is not a monic irreducible polynomial of degree {1}")]
    BadModulus(Vec<u32>, usize),
    #[error("element value {value} out of range for a field of order {order}")]
    ElementOutOfRange { value: u64, order: u64 },
    #[error("matrix is singular")]
    Singular,
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("x^n - theta is not squarefree: p = {p} divides n = {n}")]
    NotSquarefree { p: u32, n: usize },
    #[error("degree {degree} too large for {count} blocks of length {block}")]
    DegreeTooLarge {
        degree: usize,
        block: usize,
        count: usize,
    },
    #[error("invalid lambda: {0}")]
    InvalidLambda(String),
    #[error("element is not a unit (constant term is zero)")]
    NotAUnit,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("k must be at least 2, got {0}")]
    BadK(usize),
    #[error("N must be at least 1")]
    BadLength,
    #[error("polynomial does not divide x^{length} - unit")]
    NotADivisor { length: usize },
    #[error("{0} is not in the image of the Gray map")]
    NotInImage(String),
    #[error("invalid code exponents: {0}")]
    BadSpec(String),
    #[error("enumeration of {needed} codewords exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("table of {0} elements is too large")]
    TableTooLarge(u128),
}

pub type Result<T> = std::result::Result<T, Error>;
