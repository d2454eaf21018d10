use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("series division undefined: constant term of the divisor is not invertible")]
    SeriesDivision,
    #[error("series orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("special value undefined at s = 1")]
    ZetaPole,
    #[error("modulus too large for enumeration: {modulus} > {bound}")]
    ModulusTooLarge { modulus: u64, bound: u64 },
    #[error("index {index} outside table range 0..={max}")]
    OutOfRange { index: usize, max: usize },
    #[error("invalid character: {0}")]
    InvalidCharacter(String),
    #[error("{0} is not a prime below the trial-division bound {1}")]
    NotPrime(u64, u64),
    #[error("coset/measure mismatch: {0}")]
    CosetMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
