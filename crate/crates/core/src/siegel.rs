//! Degree-2 Siegel modular forms: the half-integral index lattice, the
//! Eisenstein coefficient formula, and Igusa's cusp forms of weight 10 and 12.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::Pow;

use crate::arith::primes::{divisors, gcd};
use crate::arith::{
    bernoulli, fundamental_decomposition, generalized_bernoulli_for, mobius, sigma,
    KroneckerCharacter, Rational,
};
use crate::error::{Error, Result};
use crate::fourier::{Degree2Lattice, Expansion, IndexLattice, Space};

/// `T = (a, b2/2; b2/2, c)` with integral `a`, `b2`, `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SiegelIndex {
    pub a: i64,
    pub b2: i64,
    pub c: i64,
}

impl SiegelIndex {
    pub const fn new(a: i64, b2: i64, c: i64) -> Self {
        SiegelIndex { a, b2, c }
    }

    pub fn trace(&self) -> i64 {
        self.a + self.c
    }

    /// `4 det T = 4ac − b2²`.
    pub fn det4(&self) -> i64 {
        4 * self.a * self.c - self.b2 * self.b2
    }

    pub fn is_psd(&self) -> bool {
        self.a >= 0 && self.c >= 0 && self.det4() >= 0
    }

    pub fn rank(&self) -> u8 {
        if self.a == 0 && self.b2 == 0 && self.c == 0 {
            0
        } else if self.det4() == 0 {
            1
        } else {
            2
        }
    }

    /// Largest `l` with `T / l` still half-integral. Undefined at `T = 0`.
    pub fn content(&self) -> u64 {
        debug_assert!(self.rank() > 0, "content of the zero index");
        gcd(gcd(self.a.unsigned_abs(), self.b2.unsigned_abs()), self.c.unsigned_abs())
    }

    /// `UᵀTU` for an integral 2x2 matrix `U = [[p, q], [r, s]]`.
    pub fn transform(&self, u: [[i64; 2]; 2]) -> SiegelIndex {
        let [[p, q], [r, s]] = u;
        let SiegelIndex { a, b2, c } = *self;
        SiegelIndex {
            a: a * p * p + b2 * p * r + c * r * r,
            b2: 2 * a * p * q + b2 * (p * s + q * r) + 2 * c * r * s,
            c: a * q * q + b2 * q * s + c * s * s,
        }
    }

    fn order_key(&self) -> (i64, i64, i64, i64) {
        (self.trace(), self.a, self.b2, self.c)
    }
}

impl Ord for SiegelIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for SiegelIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SiegelIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b2, self.c)
    }
}

/// The lattice Λ₂ of half-integral symmetric 2x2 matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SiegelLattice;

impl IndexLattice for SiegelLattice {
    type Index = SiegelIndex;

    fn space(&self) -> Space {
        Space::Siegel
    }

    fn zero(&self) -> SiegelIndex {
        SiegelIndex::new(0, 0, 0)
    }

    fn trace(&self, index: &SiegelIndex) -> u32 {
        index.trace() as u32
    }

    fn is_psd(&self, index: &SiegelIndex) -> bool {
        index.is_psd()
    }

    fn is_singular(&self, index: &SiegelIndex) -> bool {
        index.det4() == 0
    }

    fn checked_sub(&self, t: &SiegelIndex, s: &SiegelIndex) -> Option<SiegelIndex> {
        let d = SiegelIndex::new(t.a - s.a, t.b2 - s.b2, t.c - s.c);
        d.is_psd().then_some(d)
    }

    fn enumerate_all(&self, bound: u32) -> Vec<SiegelIndex> {
        let bound = bound as i64;
        let mut out = Vec::new();
        for a in 0..=bound {
            for c in 0..=bound - a {
                let r = (4 * a * c).sqrt();
                out.extend((-r..=r).map(|b2| SiegelIndex::new(a, b2, c)));
            }
        }
        out.sort();
        out
    }

    fn enumerate_summands(&self, t: &SiegelIndex) -> Vec<SiegelIndex> {
        let mut out = Vec::new();
        for a in 0..=t.a {
            for c in 0..=t.c {
                let r = (4 * a * c).sqrt();
                let rc = (4 * (t.a - a) * (t.c - c)).sqrt();
                // |b2| <= r and |t.b2 - b2| <= rc
                let lo = (-r).max(t.b2 - rc);
                let hi = r.min(t.b2 + rc);
                out.extend((lo..=hi).map(|b2| SiegelIndex::new(a, b2, c)));
            }
        }
        out.sort();
        out
    }

    fn key(&self, index: &SiegelIndex) -> String {
        index.to_string()
    }

    fn parse_key(&self, key: &str) -> Option<SiegelIndex> {
        let parts: Vec<i64> = key
            .split(',')
            .map(|p| p.trim().parse().ok())
            .collect::<Option<_>>()?;
        match parts[..] {
            [a, b2, c] => Some(SiegelIndex::new(a, b2, c)),
            _ => None,
        }
    }

    fn diag_embed(&self, t: u32) -> SiegelIndex {
        SiegelIndex::new(t as i64, 0, 0)
    }
}

impl Degree2Lattice for SiegelLattice {}

pub(crate) fn check_weight(k: i64) -> Result<u32> {
    if k >= 4 && k % 2 == 0 {
        Ok(k as u32)
    } else {
        Err(Error::InvalidWeight(k))
    }
}

fn big_pow(base: u64, exp: u32) -> BigInt {
    Pow::pow(BigInt::from(base), exp)
}

/// −B_k B_{2k−2} / (4k(k−1)): the constant term of G_k, and the factor relating G_k to E_k.
pub fn siegel_g_constant(k: u32) -> Rational {
    -(bernoulli(k) * bernoulli(2 * k - 2)) / Rational::from(4 * k * (k - 1))
}

/// Fourier coefficient `a_{G_k}(T)` of the Siegel Eisenstein series
/// `G_k = −B_k B_{2k−2} / (4k(k−1)) · E_k`.
///
/// In the rank-2 case `−4 det T = D f²` with `D` fundamental, and the inner
/// divisor sum runs over `g | f/d`.
pub fn siegel_g_coefficient(k: i64, t: &SiegelIndex) -> Result<Rational> {
    let k = check_weight(k)?;
    if !t.is_psd() {
        return Err(Error::NotPositiveSemidefinite(t.to_string()));
    }
    match t.rank() {
        0 => Ok(siegel_g_constant(k)),
        1 => Ok(bernoulli(2 * k - 2) / Rational::from(2 * k - 2) * Rational::from(sigma(k - 1, t.content()))),
        _ => {
            let (disc, f) = fundamental_decomposition(-t.det4())?;
            let chi = KroneckerCharacter::new(disc)?;
            let eps = t.content();
            let mut total = BigInt::from(0);
            for d in divisors(eps) {
                debug_assert!(f % d == 0);
                let fd = f / d;
                let mut inner = BigInt::from(0);
                for g in divisors(fd) {
                    let sign = mobius(g) as i64 * chi.value_u(g) as i64;
                    if sign == 0 {
                        continue;
                    }
                    let term = big_pow(g, k - 2) * sigma(2 * k - 3, fd / g);
                    if sign > 0 {
                        inner += term;
                    } else {
                        inner -= term;
                    }
                }
                total += big_pow(d, k - 1) * inner;
            }
            Ok(generalized_bernoulli_for(k - 1, &chi) / Rational::from(k - 1) * Rational::from(total))
        }
    }
}

/// Which normalization of the Eisenstein series to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EisensteinNormalization {
    /// The Bernoulli-scaled series `G_k`.
    G,
    /// Constant term 1.
    E,
}

pub fn siegel_expansion(form: EisensteinNormalization, k: i64, trace_bound: u32) -> Result<Expansion<SiegelLattice>> {
    let kk = check_weight(k)?;
    let g = Expansion::from_fn(SiegelLattice, k, trace_bound, |t| siegel_g_coefficient(k, t))?;
    Ok(match form {
        EisensteinNormalization::G => g,
        EisensteinNormalization::E => g.scale(&siegel_g_constant(kk).recip().expect("nonzero")),
    })
}

fn siegel_e(k: i64, bound: u32) -> Expansion<SiegelLattice> {
    siegel_expansion(EisensteinNormalization::E, k, bound).expect("valid weight")
}

/// Igusa's cusp form `X₁₀ = −43867 / (2¹⁰·3⁵·5²·7·53) · (E₁₀ − E₄E₆)`.
pub fn igusa_x10(trace_bound: u32) -> Expansion<SiegelLattice> {
    let scale = Rational::new(-43867, 1024i64 * 243 * 25 * 7 * 53);
    let e4e6 = siegel_e(4, trace_bound).multiply(&siegel_e(6, trace_bound)).expect("same lattice");
    siegel_e(10, trace_bound).sub(&e4e6).expect("same weight").scale(&scale)
}

/// Igusa's cusp form
/// `X₁₂ = 131·593 / (2¹¹·3⁶·5³·7²·337) · (3²·7²E₄³ + 2·5³E₆² − 691E₁₂)`.
pub fn igusa_x12(trace_bound: u32) -> Expansion<SiegelLattice> {
    let scale = Rational::new(131 * 593, 2048i64 * 729 * 125 * 49 * 337);
    let e4 = siegel_e(4, trace_bound);
    let e6 = siegel_e(6, trace_bound);
    let combo = e4
        .pow(3)
        .scale(&Rational::from(9 * 49))
        .add(&e6.pow(2).scale(&Rational::from(250)))
        .and_then(|s| s.sub(&siegel_e(12, trace_bound).scale(&Rational::from(691))))
        .expect("same weight");
    combo.scale(&scale)
}
