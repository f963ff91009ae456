//! Congruences modulo a prime between truncated expansions, plus the
//! scanners and constructions around them.

mod correction;
mod scan;
mod witness;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::primes::{factorize, inv_mod, mul_mod};
use crate::arith::{PrimeLocalization, Rational};
use crate::error::{Error, Result};
use crate::fourier::{Expansion, IndexLattice};

pub use correction::{cusp_correction, EisensteinFamily};
pub use scan::{
    bruinier_search, condition_a_check, condition_b_primes, condition_b_primes_with, irregular_pairs,
    ConditionBOptions,
};
pub use witness::{crt_witness, nontriviality_witness, WitnessMethod, WitnessReport};

fn big_mod(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

/// `num · den⁻¹ mod p`, or `None` when the denominator is not a unit mod `p`.
pub fn rational_mod_p(q: &Rational, p: u64) -> Option<u64> {
    let den = big_mod(q.denom(), p);
    let inv = inv_mod(den, p)?;
    Some(mul_mod(big_mod(q.numer(), p), inv, p))
}

/// Reduces every in-bound coefficient (zeros included) modulo `p`.
pub fn reduce_mod_p<L: IndexLattice>(f: &Expansion<L>, loc: PrimeLocalization) -> Result<BTreeMap<L::Index, u64>> {
    reduce_mod(f, loc.p())
}

/// A squarefree modulus `m = p₁⋯p_r`; congruences mod `m` hold iff they hold mod each `pᵢ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modulus {
    m: u64,
    primes: Vec<u64>,
}

impl Modulus {
    pub fn new(m: u64) -> Result<Self> {
        let factors = factorize(m);
        if m < 2 || factors.iter().any(|&(_, e)| e > 1) {
            return Err(Error::InvalidModulus(m));
        }
        Ok(Modulus {
            m,
            primes: factors.into_iter().map(|(p, _)| p).collect(),
        })
    }

    pub fn value(&self) -> u64 {
        self.m
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }
}

impl From<PrimeLocalization> for Modulus {
    fn from(loc: PrimeLocalization) -> Self {
        Modulus {
            m: loc.p(),
            primes: vec![loc.p()],
        }
    }
}

fn reduce_mod<L: IndexLattice>(f: &Expansion<L>, m: u64) -> Result<BTreeMap<L::Index, u64>> {
    f.indices()
        .into_iter()
        .map(|i| {
            let c = f.coeff(&i)?;
            let r = rational_mod_p(&c, m).ok_or_else(|| Error::NonIntegralCoefficient(f.lattice().key(&i)))?;
            Ok((i, r))
        })
        .collect()
}

/// First index where `lhs ≢ λ·rhs (mod p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceFailure {
    pub index: String,
    pub lhs: u64,
    pub rhs: u64,
}

/// Outcome of checking `f ≡ λ·g (mod p)` at every index up to the truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub modulus: u64,
    pub lambda: u64,
    pub verified: bool,
    pub indices_checked: usize,
    pub first_failure: Option<CongruenceFailure>,
}

impl CongruenceReport {
    /// λ as the representative of least absolute value (e.g. 59 mod 61 → −2).
    pub fn signed_lambda(&self) -> i64 {
        let l = self.lambda as i64;
        if 2 * l > self.modulus as i64 {
            l - self.modulus as i64
        } else {
            l
        }
    }

    /// Structured text with fields modulus, lambda, verified, indices_checked, first_failure.
    pub fn to_structured(&self) -> String {
        let failure = match &self.first_failure {
            None => "none".to_string(),
            Some(f) => format!("{} lhs={} rhs={}", f.index, f.lhs, f.rhs),
        };
        format!(
            "modulus: {}\nlambda: {}\nverified: {}\nindices_checked: {}\nfirst_failure: {}\n",
            self.modulus, self.lambda, self.verified, self.indices_checked, failure
        )
    }
}

impl fmt::Display for CongruenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lhs ≡ {} · rhs (mod {}) [λ = {}]: {} ({} indices checked)",
            self.signed_lambda(),
            self.modulus,
            self.lambda,
            if self.verified { "verified" } else { "FAILED" },
            self.indices_checked
        )?;
        if let Some(fail) = &self.first_failure {
            write!(f, "; first failure at {}: {} vs {}", fail.index, fail.lhs, fail.rhs)?;
        }
        Ok(())
    }
}

fn compatible<L: IndexLattice>(f: &Expansion<L>, g: &Expansion<L>) -> Result<(Expansion<L>, Expansion<L>)> {
    if f.lattice() != g.lattice() {
        return Err(Error::SpaceMismatch(f.space(), g.space()));
    }
    if f.weight() != g.weight() {
        return Err(Error::WeightMismatch(f.weight(), g.weight()));
    }
    let bound = f.trace_bound().min(g.trace_bound());
    Ok((f.truncate(bound), g.truncate(bound)))
}

/// Checks `f ≡ λ·g (mod m)` at every in-bound index.
pub fn verify_congruence<L: IndexLattice>(
    f: &Expansion<L>,
    g: &Expansion<L>,
    modulus: impl Into<Modulus>,
    lambda: u64,
) -> Result<CongruenceReport> {
    let modulus = modulus.into();
    let (f, g) = compatible(f, g)?;
    let m = modulus.value();
    let lambda = lambda % m;
    let lhs = reduce_mod(&f, m)?;
    let rhs = reduce_mod(&g, m)?;
    let mut first_failure = None;
    for (index, l) in lhs.iter() {
        let r = mul_mod(lambda, rhs[index], m);
        if *l != r {
            first_failure = Some(CongruenceFailure {
                index: f.lattice().key(index),
                lhs: *l,
                rhs: r,
            });
            break;
        }
    }
    Ok(CongruenceReport {
        modulus: m,
        lambda,
        verified: first_failure.is_none(),
        indices_checked: lhs.len(),
        first_failure,
    })
}

/// For each prime `p | m`, takes λ mod `p` from the first index (canonical
/// order) where `g ≢ 0 (mod p)`; combines by CRT and verifies `f ≡ λ·g (mod m)`
/// everywhere.
pub fn solve_lambda<L: IndexLattice>(
    f: &Expansion<L>,
    g: &Expansion<L>,
    modulus: impl Into<Modulus>,
) -> Result<CongruenceReport> {
    let modulus = modulus.into();
    let (f, g) = compatible(f, g)?;
    let m = modulus.value();
    let lhs = reduce_mod(&f, m)?;
    let rhs = reduce_mod(&g, m)?;
    let mut lambda = 0u64;
    let mut acc = 1u64;
    for &p in modulus.primes() {
        let (index, r) = rhs.iter().find(|(_, r)| **r % p != 0).ok_or(Error::AllZeroRhs(p))?;
        let lambda_p = mul_mod(lhs[index] % p, inv_mod(*r % p, p).expect("p prime"), p);
        // lift: lambda + acc·t ≡ lambda_p (mod p)
        let diff = (lambda_p + p - lambda % p) % p;
        let t = mul_mod(diff, inv_mod(acc % p, p).expect("distinct primes"), p);
        lambda += acc * t;
        acc *= p;
    }
    verify_congruence(&f, &g, modulus, lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::EllipticLattice;

    fn prime(p: u64) -> PrimeLocalization {
        PrimeLocalization::new(p).unwrap()
    }

    #[test]
    fn rational_reduction() {
        assert_eq!(rational_mod_p(&Rational::new(-1618, 27), 43867), Some(11313));
        assert_eq!(rational_mod_p(&Rational::zero(), 7), Some(0));
        assert_eq!(rational_mod_p(&Rational::new(7, 10), 5), None);
    }

    #[test]
    fn non_integral_names_index() {
        let f = Expansion::from_series(0, vec![Rational::one(), Rational::new(7, 10)]);
        assert_eq!(
            reduce_mod_p(&f, prime(5)),
            Err(Error::NonIntegralCoefficient("1".into()))
        );
    }

    #[test]
    fn solve_and_fail() {
        let g = Expansion::from_series(0, [0, 3, 5, 7].map(Rational::from).to_vec());
        let f = g.scale(&Rational::from(4));
        let rep = solve_lambda(&f, &g, prime(11)).unwrap();
        assert!(rep.verified);
        assert_eq!(rep.lambda, 4);
        assert_eq!(rep.indices_checked, 4);

        let h = Expansion::from_series(0, [0, 12, 20, 29].map(Rational::from).to_vec());
        let rep = solve_lambda(&h, &g, prime(11)).unwrap();
        assert!(!rep.verified);
        assert_eq!(rep.first_failure.as_ref().unwrap().index, "3");
        assert!(rep.to_structured().contains("first_failure: 3 lhs="));

        let zero = Expansion::<EllipticLattice>::zero(EllipticLattice, 0, 3);
        assert_eq!(solve_lambda(&f, &zero, prime(11)), Err(Error::AllZeroRhs(11)));
    }

    #[test]
    fn squarefree_modulus_by_crt() {
        let g = Expansion::from_series(0, [0, 7, 11, 5, 3].map(Rational::from).to_vec());
        let f = g.scale(&Rational::from(40));
        // rhs vanishes mod 7 at index 1 and mod 11 at index 2, so λ is fixed per prime
        let rep = solve_lambda(&f, &g, Modulus::new(77).unwrap()).unwrap();
        assert!(rep.verified);
        assert_eq!(rep.lambda, 40);
        assert_eq!(rep.modulus, 77);
        assert_eq!(Modulus::new(12), Err(Error::InvalidModulus(12)));
        assert_eq!(Modulus::new(1), Err(Error::InvalidModulus(1)));
        assert_eq!(Modulus::new(77683).unwrap().primes(), &[131, 593]);
    }

    #[test]
    fn signed_lambda() {
        let rep = CongruenceReport {
            modulus: 61,
            lambda: 59,
            verified: true,
            indices_checked: 0,
            first_failure: None,
        };
        assert_eq!(rep.signed_lambda(), -2);
        assert_eq!(
            rep.to_structured(),
            "modulus: 61\nlambda: 59\nverified: true\nindices_checked: 0\nfirst_failure: none\n"
        );
    }
}
