use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("a Sturm chain needs a polynomial of degree at least 1")]
    ConstantPolynomial,

    #[error("polynomial is not squarefree (gcd with its derivative has degree {gcd_degree})")]
    NotSquarefree { gcd_degree: usize },

    #[error("{what} = {value} exceeds the guard {guard} = {limit}")]
    Guard {
        what: &'static str,
        value: u64,
        guard: &'static str,
        limit: u64,
    },

    #[error("{what} must be at least {min}, got {value}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        min: u64,
    },

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("cover relations contain a cycle")]
    CyclicPoset,

    #[error("poset has more than {limit} linear extensions")]
    TooManyExtensions { limit: u64 },

    #[error("invalid polynomial literal: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
