use thiserror::Error;

use crate::fourier::Space;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a fundamental discriminant")]
    NonFundamentalDiscriminant(i64),

    #[error("{0} is not congruent to 0 or 1 mod 4")]
    InvalidDiscriminantResidue(i64),

    #[error("{0} is not one of the nine class-number-one discriminants")]
    UnsupportedField(i64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus {0} is not a product of distinct primes")]
    InvalidModulus(u64),

    #[error("G_K({m}, {n}) is not an integer: numerator {numerator} over {divisor}")]
    IntegralityViolation {
        m: u32,
        n: u64,
        numerator: String,
        divisor: u32,
    },

    #[error("invalid weight {0}: expected an even integer >= 4")]
    InvalidWeight(i64),

    #[error("index {0} is not positive semidefinite")]
    NotPositiveSemidefinite(String),

    #[error("space mismatch: {0} vs {1}")]
    SpaceMismatch(Space, Space),

    #[error("weight mismatch: {0} vs {1}")]
    WeightMismatch(i64, i64),

    #[error("index {index} lies beyond the truncation (trace bound {trace_bound})")]
    OutOfTruncation { index: String, trace_bound: u32 },

    #[error("parse error at line {line}, offset {offset}: {message}")]
    Parse {
        line: usize,
        offset: usize,
        message: String,
    },

    #[error("expansion is not in the span of E4/E6 monomials of weight {weight}: {reason}")]
    NotInSpace { weight: i64, reason: String },

    #[error("coefficient at index {0} is not p-integral")]
    NonIntegralCoefficient(String),

    #[error("right-hand side vanishes mod {0} at every index; multiplier undefined")]
    AllZeroRhs(u64),

    #[error("form {form} is not defined for discriminant {disc}")]
    UnsupportedFieldForm { form: String, disc: i64 },

    #[error("no witness prime found within {0} progression steps")]
    WitnessSearchExhausted(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
