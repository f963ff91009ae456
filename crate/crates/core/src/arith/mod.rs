//! Exact scalar kernel: rationals, Bernoulli numbers, Kronecker characters,
//! divisor sums and p-adic valuations.

pub mod bernoulli;
pub mod character;
pub mod functions;
pub mod primes;
pub mod rational;

pub use bernoulli::{bernoulli, bernoulli_polynomial, generalized_bernoulli, generalized_bernoulli_for};
pub use character::{
    fundamental_decomposition, is_fundamental_discriminant, kronecker_chi, kronecker_symbol,
    KroneckerCharacter,
};
pub use functions::{
    divisor_power_sum, g_value, is_p_integral, mobius, p_valuation, sigma, Twist, Valuation,
};
pub use primes::{is_prime, PrimeLocalization};
pub use rational::Rational;
