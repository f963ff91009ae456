use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Signed, Zero};

use super::character::KroneckerCharacter;
use super::primes::{divisors, factorize, PrimeLocalization};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Möbius function.
pub fn mobius(n: u64) -> i8 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let mut sign = 1i8;
    for (_, e) in factorize(n) {
        if e > 1 {
            return 0;
        }
        sign = -sign;
    }
    sign
}

/// Which divisor sum to take in [`divisor_power_sum`].
#[derive(Debug, Clone, Copy)]
pub enum Twist<'a> {
    /// σ_m(N) = Σ d^m
    None,
    /// σ_{m,χ}(N) = Σ χ(d) d^m
    Character(&'a KroneckerCharacter),
    /// σ*_{m,χ}(N) = Σ χ(N/d) d^m
    Starred(&'a KroneckerCharacter),
}

pub fn divisor_power_sum(m: u32, n: u64, twist: Twist<'_>) -> BigInt {
    assert!(n >= 1, "divisor sums are defined for N >= 1");
    let mut acc = BigInt::zero();
    for d in divisors(n) {
        let weight = match twist {
            Twist::None => 1,
            Twist::Character(chi) => chi.value_u(d),
            Twist::Starred(chi) => chi.value_u(n / d),
        };
        if weight == 0 {
            continue;
        }
        let term: BigInt = Pow::pow(BigInt::from(d), m);
        if weight > 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// σ_m(N).
pub fn sigma(m: u32, n: u64) -> BigInt {
    divisor_power_sum(m, n, Twist::None)
}

/// G_K(m, N) = (σ_{m,χ}(N) − σ*_{m,χ}(N)) / (1 + |χ(N)|), checked to be an integer.
pub fn g_value(chi: &KroneckerCharacter, m: u32, n: u64) -> Result<BigInt> {
    let diff = divisor_power_sum(m, n, Twist::Character(chi))
        - divisor_power_sum(m, n, Twist::Starred(chi));
    let divisor = 1 + chi.value_u(n).unsigned_abs() as u32;
    let (q, r) = diff.div_rem(&BigInt::from(divisor));
    if !r.is_zero() {
        return Err(Error::IntegralityViolation {
            m,
            n,
            numerator: diff.to_string(),
            divisor,
        });
    }
    Ok(q)
}

/// p-adic valuation of a rational; zero has infinite valuation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_nonnegative(self) -> bool {
        match self {
            Valuation::Finite(v) => v >= 0,
            Valuation::Infinite => true,
        }
    }
}

fn integer_valuation(n: &BigInt, p: u64) -> i64 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

pub fn p_valuation(q: &Rational, loc: PrimeLocalization) -> Valuation {
    if q.is_zero() {
        return Valuation::Infinite;
    }
    Valuation::Finite(integer_valuation(q.numer(), loc.p()) - integer_valuation(q.denom(), loc.p()))
}

/// Membership in Z_(p): the denominator is prime to p.
pub fn is_p_integral(q: &Rational, loc: PrimeLocalization) -> bool {
    p_valuation(q, loc).is_nonnegative()
}
