//! Primality, factorization and modular arithmetic, mostly on `u64`, with
//! big-integer Miller-Rabin and Pollard–Brent for large cofactors.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A prime number, checked on construction. Houses the notion of
/// p-integrality (membership in the localization of Z at p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeLocalization(u64);

impl PrimeLocalization {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(PrimeLocalization(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn p(self) -> u64 {
        self.0
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Modular inverse via the extended Euclidean algorithm.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

// Deterministic for all n < 3.3 * 10^24.
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Upper limit below which [`is_prime_big`] is a proof of primality.
pub const MR_DETERMINISTIC_LIMIT: u128 = 3_317_044_064_679_887_385_961_981;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in MR_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin over the first thirteen prime bases; returns `None` when
/// `n` is at or above [`MR_DETERMINISTIC_LIMIT`] and the answer would only be probable.
pub fn is_prime_big(n: &BigUint) -> Option<bool> {
    if let Some(small) = n.to_u64() {
        return Some(is_prime(small));
    }
    if *n >= BigUint::from(MR_DETERMINISTIC_LIMIT) {
        return None;
    }
    Some(miller_rabin_big(n))
}

/// Miller-Rabin over the same thirteen bases at any size; a proof only below
/// [`MR_DETERMINISTIC_LIMIT`].
pub fn is_probable_prime_big(n: &BigUint) -> bool {
    match n.to_u64() {
        Some(small) => is_prime(small),
        None => miller_rabin_big(n),
    }
}

fn miller_rabin_big(n: &BigUint) -> bool {
    for p in MR_BASES {
        if (n % p).is_zero() {
            return *n == BigUint::from(p);
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of the odd composite `n` by Brent's variant of
/// Pollard's rho, or `None` if every tried polynomial exceeds `max_steps`.
pub fn pollard_brent(n: &BigUint, max_steps: u64) -> Option<BigUint> {
    let one = BigUint::one();
    let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    for c in 1u32..=8 {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let batch = 128u64;
        let (mut y, mut r, mut q, mut g) = (BigUint::from(2u32), 1u64, one.clone(), one.clone());
        let mut x = y.clone();
        let mut ys = y.clone();
        while g == one && r <= max_steps {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..batch.min(r - k) {
                    y = f(&y);
                    q = (q * diff(&x, &y)) % n;
                }
                g = q.gcd(n);
                k += batch;
            }
            r *= 2;
        }
        if g == one {
            continue;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                g = diff(&x, &ys).gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if g != *n {
            return Some(g);
        }
    }
    None
}

/// How far a factor of [`factor_big`] is known to be prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorStatus {
    Prime,
    /// Passes Miller-Rabin but lies above the certification limit.
    ProbablePrime,
    /// Composite that Pollard's rho could not split within its budget.
    Composite,
}

/// Prime factorization of `n > 0`: trial division below `trial_bound`,
/// then Pollard–Brent on what remains. Sorted by factor.
pub fn factor_big(n: &BigUint, trial_bound: u64) -> Vec<(BigUint, u32, FactorStatus)> {
    let mut rest = n.clone();
    let mut out: Vec<(BigUint, u32, FactorStatus)> = Vec::new();
    let table = primes_below_ten_million();
    let owned;
    let primes: &[u64] = if trial_bound <= 10_000_000 {
        &table[..table.partition_point(|&p| p < trial_bound)]
    } else {
        owned = primes_up_to(trial_bound);
        &owned
    };
    let mut proven_below = BigUint::from(trial_bound) * trial_bound;
    for &p in primes {
        if rest.is_one() {
            break;
        }
        if BigUint::from(p) * p > rest {
            proven_below = BigUint::from(p) * p;
            break;
        }
        let mut e = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            out.push((BigUint::from(p), e, FactorStatus::Prime));
        }
    }
    let mut pending = vec![rest];
    while let Some(m) = pending.pop() {
        if m.is_one() {
            continue;
        }
        let status = if m < proven_below {
            Some(FactorStatus::Prime)
        } else if is_probable_prime_big(&m) {
            Some(if is_prime_big(&m) == Some(true) {
                FactorStatus::Prime
            } else {
                FactorStatus::ProbablePrime
            })
        } else {
            None
        };
        match status {
            Some(st) => match out.iter_mut().find(|(q, _, _)| *q == m) {
                Some(entry) => entry.1 += 1,
                None => out.push((m, 1, st)),
            },
            None => match pollard_brent(&m, 1 << 24) {
                Some(d) => {
                    let other = &m / &d;
                    pending.push(d);
                    pending.push(other);
                }
                None => out.push((m, 1, FactorStatus::Composite)),
            },
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Factorization by trial division over a 2,3-wheel, as `(prime, exponent)` pairs
/// in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    let mut push = |n: &mut u64, p: u64| {
        if *n % p == 0 {
            let mut e = 0;
            while *n % p == 0 {
                *n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    };
    push(&mut n, 2);
    push(&mut n, 3);
    let mut p = 5u64;
    let mut step = 2;
    while p.saturating_mul(p) <= n {
        push(&mut n, p);
        p += step;
        step = 6 - step;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n`, sorted.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factorize(n) {
        let len = ds.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                ds.push(ds[i] * pk);
            }
        }
    }
    ds.sort_unstable();
    ds
}

pub fn is_squarefree(n: u64) -> bool {
    n != 0 && factorize(n).iter().all(|&(_, e)| e == 1)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Smallest primitive root modulo the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = factorize(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&(q, _)| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("every prime has a primitive root")
}

/// Primes up to `limit` by the sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i.saturating_mul(i);
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Shared prime table for the default trial-division bound of the scanners.
pub(crate) fn primes_below_ten_million() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| primes_up_to(10_000_000))
}
