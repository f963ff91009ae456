//! Prime scanners: irregular pairs, conditions (A) and (B) for Hermitian
//! Eisenstein series, and the search for a non-vanishing twisted Bernoulli number.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{ToPrimitive, Zero};

use crate::arith::primes::{is_prime_big, primes_below_ten_million, primes_up_to};
use crate::arith::{bernoulli, generalized_bernoulli_for, is_fundamental_discriminant, KroneckerCharacter};
use crate::hermitian::ImagQuadField;

fn divides(p: u64, n: &BigInt) -> bool {
    (n % BigInt::from(p)).is_zero()
}

/// All irregular pairs `(p, m)`: `p <= p_max` prime, `1 < m < p`, `p | B_m`.
/// Sorted by `p`, then `m`.
pub fn irregular_pairs(p_max: u64) -> Vec<(u64, u32)> {
    let primes: Vec<u64> = primes_up_to(p_max).into_iter().filter(|&p| p >= 3).collect();
    let mut out = Vec::new();
    let Some(&largest) = primes.last() else { return out };
    let numerators: Vec<(u32, BigInt)> = (2..largest as u32)
        .step_by(2)
        .map(|m| (m, bernoulli(m).numer().clone()))
        .collect();
    for &p in &primes {
        for (m, numer) in numerators.iter().take_while(|(m, _)| (*m as u64) < p) {
            if divides(p, numer) {
                out.push((p, *m));
            }
        }
    }
    out
}

/// Condition (A): `p` divides neither `B_{3,χ}` nor `B_{5,χ}`.
pub fn condition_a_check(field: &ImagQuadField, p: u64) -> bool {
    [3, 5].iter().all(|&n| {
        let b = generalized_bernoulli_for(n, field.character());
        !divides(p, b.numer())
    })
}

/// Tuning for [`condition_b_primes_with`].
#[derive(Debug, Clone)]
pub struct ConditionBOptions {
    /// Trial-division limit on prime factors.
    pub trial_bound: u64,
    /// Extra primes whose divisibility is tested directly, regardless of size.
    pub candidates: Vec<u128>,
}

impl Default for ConditionBOptions {
    fn default() -> Self {
        ConditionBOptions {
            trial_bound: 10_000_000,
            candidates: Vec::new(),
        }
    }
}

/// Little-endian base-2⁶⁴ magnitude with in-place division by small primes.
struct Limbs(Vec<u64>);

impl Limbs {
    fn from_big(n: &BigUint) -> Self {
        Limbs(n.to_u64_digits())
    }

    fn rem(&self, p: u64) -> u64 {
        let mut r: u128 = 0;
        for &d in self.0.iter().rev() {
            r = ((r << 64) | d as u128) % p as u128;
        }
        r as u64
    }

    fn div_exact(&mut self, p: u64) {
        let mut r: u128 = 0;
        for d in self.0.iter_mut().rev() {
            let cur = (r << 64) | *d as u128;
            *d = (cur / p as u128) as u64;
            r = cur % p as u128;
        }
        debug_assert_eq!(r, 0);
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    fn is_one(&self) -> bool {
        self.0 == [1]
    }

    /// `self < p²`, i.e. no further factor below `p` can remain.
    fn less_than_square(&self, p: u64) -> bool {
        match self.0.len() {
            0 | 1 => (self.0.first().copied().unwrap_or(0) as u128) < (p as u128) * (p as u128),
            2 => ((self.0[1] as u128) << 64 | self.0[0] as u128) < (p as u128) * (p as u128),
            _ => false,
        }
    }

    fn to_big(&self) -> BigUint {
        BigUint::new(self.0.iter().flat_map(|&d| [d as u32, (d >> 32) as u32]).collect())
    }
}

/// Primes `p > floor` dividing `n`: trial division up to the bound, then a
/// certified primality check of the cofactor (reported only if certified).
fn large_prime_divisors(n: &BigInt, floor: u64, opts: &ConditionBOptions) -> Vec<u128> {
    let mut found = Vec::new();
    if n.is_zero() {
        return found;
    }
    let magnitude = n.magnitude();
    let mut cof = Limbs::from_big(magnitude);
    let owned;
    let primes: &[u64] = if opts.trial_bound <= 10_000_000 {
        let all = primes_below_ten_million();
        let end = all.partition_point(|&p| p <= opts.trial_bound);
        &all[..end]
    } else {
        owned = primes_up_to(opts.trial_bound);
        &owned
    };
    let mut exhausted = true;
    for &p in primes {
        if cof.is_one() {
            break;
        }
        if cof.less_than_square(p) {
            // the remaining cofactor is itself prime
            exhausted = false;
            break;
        }
        if cof.rem(p) == 0 {
            while cof.rem(p) == 0 {
                cof.div_exact(p);
            }
            if p > floor {
                found.push(p as u128);
            }
        }
    }
    if !cof.is_one() {
        let big = cof.to_big();
        let certified_prime = if !exhausted {
            true
        } else {
            is_prime_big(&big) == Some(true)
        };
        if certified_prime {
            if let Some(q) = big.to_u128() {
                if q > floor as u128 {
                    found.push(q);
                }
            }
        }
    }
    for &c in &opts.candidates {
        let divides_n = (n % BigInt::from(c)).is_zero();
        if c > floor as u128 && !found.contains(&c) && divides_n && is_prime_big(&BigUint::from(c)) != Some(false) {
            found.push(c);
        }
    }
    found.sort_unstable();
    found
}

/// Condition (B) primes for each even weight `4 <= k <= k_max`: primes
/// `p > k + 1` dividing the numerator of `B_{k−1,χ_K}`.
pub fn condition_b_primes_with(
    field: &ImagQuadField,
    k_max: u32,
    opts: &ConditionBOptions,
) -> BTreeMap<u32, Vec<u128>> {
    (4..=k_max)
        .step_by(2)
        .map(|k| {
            let b = generalized_bernoulli_for(k - 1, field.character());
            (k, large_prime_divisors(b.numer(), k as u64 + 1, opts))
        })
        .collect()
}

pub fn condition_b_primes(field: &ImagQuadField, k_max: u32) -> BTreeMap<u32, Vec<u128>> {
    condition_b_primes_with(field, k_max, &ConditionBOptions::default())
}

/// Smallest `|D₀| <= cap` with `D₀ < 0` fundamental and `p ∤ B_{k−1,χ_{D₀}}`.
pub fn bruinier_search(k: u32, p: u64, abs_disc_max: u64) -> Option<i64> {
    (3..=abs_disc_max as i64)
        .map(|n| -n)
        .filter(|&d| is_fundamental_discriminant(d))
        .find(|&d| {
            let chi = KroneckerCharacter::new(d).expect("fundamental");
            let b = generalized_bernoulli_for(k - 1, &chi);
            b.numer().sign() != Sign::NoSign && !divides(p, b.numer())
        })
}
