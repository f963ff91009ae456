use crate::arith::primes::{is_prime, pow_mod, primes_up_to, primitive_root};
use crate::error::{Error, Result};
use crate::hermitian::ImagQuadField;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessMethod {
    DirectSearch,
    CrtConstruction,
}

/// A prime `q` with `χ_K(q) = −1` and `q^{k−2} ≢ 1 (mod p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub q: u64,
    pub chi_value: i8,
    pub pow_residue: u64,
    pub method: WitnessMethod,
}

const DIRECT_SEARCH_LIMIT: u64 = 100_000;

fn check_hypotheses(field: &ImagQuadField, k: u32, p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k < 2 || (k - 2) as u64 >= p - 1 {
        return Err(Error::InvalidArgument(format!("need k − 2 < p − 1 (k = {k}, p = {p})")));
    }
    if field.abs_disc() as u64 % p == 0 {
        return Err(Error::InvalidArgument(format!("p = {p} divides d_K = {}", field.disc())));
    }
    Ok(())
}

fn report(field: &ImagQuadField, k: u32, p: u64, q: u64, method: WitnessMethod) -> Option<WitnessReport> {
    let chi_value = field.character().value_u(q);
    let pow_residue = pow_mod(q, (k - 2) as u64, p);
    (chi_value == -1 && pow_residue != 1).then_some(WitnessReport {
        q,
        chi_value,
        pow_residue,
        method,
    })
}

/// The existence construction: with `α` a primitive root mod `p`, take
/// `a ≡ α (mod p)`, `a ≡ −1 (mod |d_K|)` and scan `a + n·p·|d_K|` for a prime.
pub fn crt_witness(field: &ImagQuadField, k: u32, p: u64, step_cap: u64) -> Result<WitnessReport> {
    check_hypotheses(field, k, p)?;
    let alpha = primitive_root(p);
    let m = field.abs_disc() as u64;
    let modulus = p * m;
    // smallest a in [0, p·m) with a ≡ α mod p and a ≡ −1 mod m
    let a = (0..m)
        .map(|j| alpha + j * p)
        .find(|a| a % m == m - 1)
        .expect("p and |d_K| are coprime");
    for n in 1..=step_cap {
        let q = a + n * modulus;
        if is_prime(q) {
            return Ok(report(field, k, p, q, WitnessMethod::CrtConstruction)
                .expect("construction satisfies both conditions"));
        }
    }
    Err(Error::WitnessSearchExhausted(step_cap))
}

/// Smallest prime `q < 10⁵` meeting both conditions, falling back to
/// [`crt_witness`] with the given progression cap.
pub fn nontriviality_witness(field: &ImagQuadField, k: u32, p: u64, step_cap: u64) -> Result<WitnessReport> {
    check_hypotheses(field, k, p)?;
    primes_up_to(DIRECT_SEARCH_LIMIT)
        .into_iter()
        .find_map(|q| report(field, k, p, q, WitnessMethod::DirectSearch))
        .map_or_else(|| crt_witness(field, k, p, step_cap), Ok)
}
