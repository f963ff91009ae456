//! Bernoulli numbers, Bernoulli polynomials and character-twisted
//! (generalized) Bernoulli numbers.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use super::character::KroneckerCharacter;
use super::rational::Rational;
use crate::error::Result;

/// Even-index values B_0, B_2, B_4, ... ; extended on demand, never rewritten.
fn even_cache() -> &'static RwLock<Vec<Rational>> {
    static CACHE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

/// Tangent numbers T_1..T_n by the in-place integer recurrence of Brent and Harvey.
fn tangent_numbers(n: usize) -> Vec<BigInt> {
    let mut t: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    if n == 0 {
        return t;
    }
    t[1] = BigInt::one();
    for k in 2..=n {
        t[k] = &t[k - 1] * (k - 1);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * (j - k) + &t[j] * (j - k + 2);
        }
    }
    t
}

/// B_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)) for k = 0..=half.
fn even_bernoulli_table(half: usize) -> Vec<Rational> {
    let t = tangent_numbers(half);
    let mut out = Vec::with_capacity(half + 1);
    out.push(Rational::one());
    for k in 1..=half {
        let four_k = BigInt::one() << (2 * k);
        let denom = &four_k * (&four_k - 1u32);
        let mut numer = &t[k] * (2 * k);
        if k % 2 == 0 {
            numer = -numer;
        }
        out.push(Rational::new(numer, denom));
    }
    out
}

/// The m-th Bernoulli number with B_1 = -1/2.
pub fn bernoulli(m: u32) -> Rational {
    if m == 1 {
        return Rational::new(-1, 2);
    }
    if m % 2 == 1 {
        return Rational::zero();
    }
    let half = (m / 2) as usize;
    {
        let cache = even_cache().read().expect("bernoulli cache poisoned");
        if let Some(b) = cache.get(half) {
            return b.clone();
        }
    }
    let mut cache = even_cache().write().expect("bernoulli cache poisoned");
    if cache.len() <= half {
        let target = half.max(2 * cache.len()).max(16);
        let table = even_bernoulli_table(target);
        let start = cache.len();
        cache.extend(table.into_iter().skip(start));
    }
    cache[half].clone()
}

/// B_n(x) = sum_{j=0}^{n} C(n, j) B_j x^(n-j).
pub fn bernoulli_polynomial(n: u32, x: &Rational) -> Rational {
    // Horner in x over the coefficients C(n, j) B_j, highest power first.
    let mut acc = Rational::zero();
    for j in 0..=n {
        acc = acc * x;
        let b = bernoulli(j);
        if !b.is_zero() {
            acc += &(b * Rational::from_integer(binomial(BigInt::from(n), BigInt::from(j))));
        }
    }
    acc
}

/// B_{n,chi} = f^(n-1) sum_{a=1}^{f} chi(a) B_n(a/f), f the conductor |D|.
pub fn generalized_bernoulli_for(n: u32, chi: &KroneckerCharacter) -> Rational {
    assert!(n >= 1, "generalized Bernoulli numbers are indexed from 1");
    let f = chi.modulus();
    let f_rat = Rational::from(f);
    let mut sum = Rational::zero();
    for a in 1..=f {
        match chi.value(a as i64) {
            0 => {}
            s => {
                let term = bernoulli_polynomial(n, &(Rational::from(a) / &f_rat));
                if s > 0 {
                    sum += &term;
                } else {
                    sum -= &term;
                }
            }
        }
    }
    sum * f_rat.pow(n as i32 - 1)
}

/// B_{n,chi_D} for a fundamental discriminant D.
pub fn generalized_bernoulli(n: u32, disc: i64) -> Result<Rational> {
    let chi = KroneckerCharacter::new(disc)?;
    Ok(generalized_bernoulli_for(n, &chi))
}
