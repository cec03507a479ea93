use thiserror::Error;

/// Errors raised by the arithmetic, totient, progression and power-residue
/// operations. Integer payloads are widened to `u128` so one error type
/// serves every integer width.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd(0, 0) is undefined")]
    GcdUndefined,

    #[error("modulus must be at least 1")]
    InvalidModulus,

    #[error("{what} must be at least 1")]
    ZeroInput { what: &'static str },

    #[error("{value} is not coprime to {modulus} (common divisor {divisor})")]
    NotCoprime {
        value: u128,
        modulus: u128,
        divisor: u128,
    },

    #[error("{n} exceeds the brute-force oracle bound {bound}")]
    OracleBoundExceeded { n: u128, bound: u128 },

    #[error("{what} must be at least {min}")]
    BelowMinimum { what: &'static str, min: u128 },

    #[error("{value} is not prime")]
    NotPrime { value: u128 },

    #[error("prime {value} appears more than once")]
    RepeatedPrime { value: u128 },

    #[error("{what} does not fit the integer width")]
    Overflow { what: &'static str },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
