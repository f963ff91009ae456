//! Degree-2 Hermitian modular forms over the nine imaginary quadratic fields
//! of class number one.
//!
//! A Hermitian index `H = (a, h; h̄, c)` has integral diagonal and
//! off-diagonal `h = β / √d_K` with `β = x + y·ω_K ∈ O_K`,
//! `ω_K = (d_K + √d_K)/2`. We store `(a, x, y, c)`; then
//! `|d_K| det H = |d_K|·a·c − N(β)` is an integer.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::Pow;

use crate::arith::primes::{divisors, gcd};
use crate::arith::{bernoulli, g_value, generalized_bernoulli_for, sigma, KroneckerCharacter, Rational};
use crate::error::{Error, Result};
use crate::fourier::{Degree2Lattice, Expansion, IndexLattice, Space};
use crate::siegel::{check_weight, EisensteinNormalization};

/// Discriminants of the imaginary quadratic fields with class number one.
pub const CLASS_NUMBER_ONE_DISCRIMINANTS: [i64; 9] = [-3, -4, -7, -8, -11, -19, -43, -67, -163];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImagQuadField {
    disc: i64,
    chi: KroneckerCharacter,
}

impl ImagQuadField {
    pub fn new(disc: i64) -> Result<Self> {
        if !CLASS_NUMBER_ONE_DISCRIMINANTS.contains(&disc) {
            return Err(Error::UnsupportedField(disc));
        }
        Ok(ImagQuadField {
            disc,
            chi: KroneckerCharacter::new(disc)?,
        })
    }

    pub fn disc(&self) -> i64 {
        self.disc
    }

    pub fn abs_disc(&self) -> i64 {
        -self.disc
    }

    pub fn character(&self) -> &KroneckerCharacter {
        &self.chi
    }

    /// `N(x + y·ω_K) = x² + d·x·y + y²·(d² − d)/4`.
    pub fn norm(&self, x: i64, y: i64) -> i64 {
        let d = self.disc;
        x * x + d * x * y + y * y * ((d * d - d) / 4)
    }

    /// Complex conjugate of `x + y·ω_K` in the same basis (`ω̄ = d − ω`).
    pub fn conjugate(&self, x: i64, y: i64) -> (i64, i64) {
        (x + y * self.disc, -y)
    }

    /// All `(x, y)` with `N(x + y·ω_K) <= bound`, lexicographic.
    pub fn elements_of_norm_at_most(&self, bound: i64) -> Vec<(i64, i64)> {
        if bound < 0 {
            return Vec::new();
        }
        // 4N = (2x + y·d)² + |d|·y²
        let ad = self.abs_disc();
        let y_max = (4 * bound / ad).sqrt();
        let mut out = Vec::new();
        for y in -y_max..=y_max {
            let s = (4 * bound - ad * y * y).sqrt();
            let centre = -y * self.disc;
            let lo = (centre - s).div_euclid(2) + i64::from((centre - s).rem_euclid(2) != 0);
            let hi = (centre + s).div_euclid(2);
            out.extend((lo..=hi).map(|x| (x, y)));
        }
        out.sort();
        out
    }
}

/// Hermitian index `(a, x + y·ω_K, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HermitianIndex {
    pub a: i64,
    pub x: i64,
    pub y: i64,
    pub c: i64,
}

impl HermitianIndex {
    pub const fn new(a: i64, x: i64, y: i64, c: i64) -> Self {
        HermitianIndex { a, x, y, c }
    }

    pub const fn diag(a: i64, c: i64) -> Self {
        HermitianIndex { a, x: 0, y: 0, c }
    }

    pub fn trace(&self) -> i64 {
        self.a + self.c
    }

    pub fn is_zero(&self) -> bool {
        *self == HermitianIndex::new(0, 0, 0, 0)
    }

    /// Largest `l` with `H / l` in the lattice. Undefined at `H = 0`.
    pub fn content(&self) -> u64 {
        debug_assert!(!self.is_zero(), "content of the zero index");
        [self.c, self.x, self.y]
            .iter()
            .fold(self.a.unsigned_abs(), |g, v| gcd(g, v.unsigned_abs()))
    }

    fn order_key(&self) -> (i64, i64, i64, i64, i64) {
        (self.trace(), self.a, self.x, self.y, self.c)
    }
}

impl Ord for HermitianIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for HermitianIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for HermitianIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.x, self.y, self.c)
    }
}

/// The lattice Λ₂(K).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianLattice {
    field: ImagQuadField,
}

impl HermitianLattice {
    pub fn new(field: ImagQuadField) -> Self {
        HermitianLattice { field }
    }

    pub fn field(&self) -> &ImagQuadField {
        &self.field
    }

    /// `|d_K| det H = |d_K|·a·c − N(β)`.
    pub fn det_n(&self, h: &HermitianIndex) -> i64 {
        self.field.abs_disc() * h.a * h.c - self.field.norm(h.x, h.y)
    }

    pub fn rank(&self, h: &HermitianIndex) -> u8 {
        if h.is_zero() {
            0
        } else if self.det_n(h) == 0 {
            1
        } else {
            2
        }
    }

    /// `(a, β, c) ↦ (a, β̄, c)`.
    pub fn conjugate(&self, h: &HermitianIndex) -> HermitianIndex {
        let (x, y) = self.field.conjugate(h.x, h.y);
        HermitianIndex::new(h.a, x, y, h.c)
    }

    /// `(a, β, c) ↦ (c, β̄, a)`.
    pub fn swap(&self, h: &HermitianIndex) -> HermitianIndex {
        let (x, y) = self.field.conjugate(h.x, h.y);
        HermitianIndex::new(h.c, x, y, h.a)
    }
}

impl IndexLattice for HermitianLattice {
    type Index = HermitianIndex;

    fn space(&self) -> Space {
        Space::Hermitian(self.field.disc)
    }

    fn zero(&self) -> HermitianIndex {
        HermitianIndex::new(0, 0, 0, 0)
    }

    fn trace(&self, index: &HermitianIndex) -> u32 {
        index.trace() as u32
    }

    fn is_psd(&self, h: &HermitianIndex) -> bool {
        h.a >= 0 && h.c >= 0 && self.det_n(h) >= 0
    }

    fn is_singular(&self, h: &HermitianIndex) -> bool {
        self.det_n(h) == 0
    }

    fn checked_sub(&self, t: &HermitianIndex, s: &HermitianIndex) -> Option<HermitianIndex> {
        let d = HermitianIndex::new(t.a - s.a, t.x - s.x, t.y - s.y, t.c - s.c);
        self.is_psd(&d).then_some(d)
    }

    fn enumerate_all(&self, bound: u32) -> Vec<HermitianIndex> {
        let bound = bound as i64;
        let ad = self.field.abs_disc();
        let mut out = Vec::new();
        for a in 0..=bound {
            for c in 0..=bound - a {
                out.extend(
                    self.field
                        .elements_of_norm_at_most(ad * a * c)
                        .into_iter()
                        .map(|(x, y)| HermitianIndex::new(a, x, y, c)),
                );
            }
        }
        out.sort();
        out
    }

    fn enumerate_summands(&self, t: &HermitianIndex) -> Vec<HermitianIndex> {
        let ad = self.field.abs_disc();
        let mut out = Vec::new();
        for a in 0..=t.a {
            for c in 0..=t.c {
                let room = ad * (t.a - a) * (t.c - c);
                out.extend(
                    self.field
                        .elements_of_norm_at_most(ad * a * c)
                        .into_iter()
                        .filter(|&(x, y)| self.field.norm(t.x - x, t.y - y) <= room)
                        .map(|(x, y)| HermitianIndex::new(a, x, y, c)),
                );
            }
        }
        out.sort();
        out
    }

    fn key(&self, index: &HermitianIndex) -> String {
        index.to_string()
    }

    fn parse_key(&self, key: &str) -> Option<HermitianIndex> {
        let parts: Vec<i64> = key
            .split(',')
            .map(|p| p.trim().parse().ok())
            .collect::<Option<_>>()?;
        match parts[..] {
            [a, x, y, c] => Some(HermitianIndex::new(a, x, y, c)),
            _ => None,
        }
    }

    fn diag_embed(&self, t: u32) -> HermitianIndex {
        HermitianIndex::diag(t as i64, 0)
    }
}

impl Degree2Lattice for HermitianLattice {}

/// Character ν_k of the Hermitian modular group attached to forms of weight k.
/// Carried as metadata only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NuCharacter {
    /// `det^e`
    DetPower(i64),
    Trivial,
}

pub fn nu_character(field: &ImagQuadField, k: i64) -> NuCharacter {
    match field.disc() {
        -4 => NuCharacter::DetPower(k / 2),
        -3 => NuCharacter::DetPower(k),
        _ => NuCharacter::Trivial,
    }
}

/// Weight-k Hermitian Eisenstein series for one field, with the Bernoulli
/// factors computed once.
#[derive(Debug, Clone)]
pub struct HermitianEisenstein {
    lattice: HermitianLattice,
    k: u32,
    b_k: Rational,
    b_chi: Rational,
}

impl HermitianEisenstein {
    pub fn new(field: &ImagQuadField, k: i64) -> Result<Self> {
        let k = check_weight(k)?;
        Ok(HermitianEisenstein {
            lattice: HermitianLattice::new(field.clone()),
            k,
            b_k: bernoulli(k),
            b_chi: generalized_bernoulli_for(k - 1, field.character()),
        })
    }

    /// `B_k·B_{k−1,χ} / (4k(k−1))`, the ratio `G_{k,K} / E_{k,K}`.
    pub fn g_over_e(&self) -> Rational {
        &self.b_k * &self.b_chi / Rational::from(4 * self.k * (self.k - 1))
    }

    fn check(&self, h: &HermitianIndex) -> Result<()> {
        if self.lattice.is_psd(h) {
            Ok(())
        } else {
            Err(Error::NotPositiveSemidefinite(h.to_string()))
        }
    }

    /// `Σ_{d | ε(H)} d^{k−1} G_K(k−2, |d_K| det H / d²)`.
    fn rank_two_sum(&self, h: &HermitianIndex) -> Result<BigInt> {
        let det_n = self.lattice.det_n(h) as u64;
        let chi = self.lattice.field.character();
        let mut total = BigInt::from(0);
        for d in divisors(h.content()) {
            debug_assert!(det_n % (d * d) == 0);
            total += Pow::pow(BigInt::from(d), self.k - 1) * g_value(chi, self.k - 2, det_n / (d * d))?;
        }
        Ok(total)
    }

    /// Coefficient of `G_{k,K}`.
    pub fn g_coefficient(&self, h: &HermitianIndex) -> Result<Rational> {
        self.check(h)?;
        let k = self.k;
        match self.lattice.rank(h) {
            0 => Ok(self.g_over_e()),
            1 => Ok(-(&self.b_chi / Rational::from(2 * k - 2)) * Rational::from(sigma(k - 1, h.content()))),
            _ => Ok(Rational::from(self.rank_two_sum(h)?)),
        }
    }

    /// Coefficient of `E_{k,K}`, normalized to constant term 1.
    pub fn e_coefficient(&self, h: &HermitianIndex) -> Result<Rational> {
        self.check(h)?;
        let k = self.k;
        match self.lattice.rank(h) {
            0 => Ok(Rational::one()),
            1 => Ok(-(Rational::from(2 * k) / &self.b_k) * Rational::from(sigma(k - 1, h.content()))),
            _ => {
                let factor = Rational::from(4 * k * (k - 1)) / (&self.b_k * &self.b_chi);
                Ok(factor * Rational::from(self.rank_two_sum(h)?))
            }
        }
    }

    pub fn expansion(&self, form: EisensteinNormalization, trace_bound: u32) -> Result<Expansion<HermitianLattice>> {
        let weight = self.k as i64;
        match form {
            EisensteinNormalization::G => {
                Expansion::from_fn(self.lattice.clone(), weight, trace_bound, |h| self.g_coefficient(h))
            }
            EisensteinNormalization::E => {
                Expansion::from_fn(self.lattice.clone(), weight, trace_bound, |h| self.e_coefficient(h))
            }
        }
    }
}

pub fn hermitian_g_coefficient(field: &ImagQuadField, k: i64, h: &HermitianIndex) -> Result<Rational> {
    HermitianEisenstein::new(field, k)?.g_coefficient(h)
}

pub fn hermitian_e_coefficient(field: &ImagQuadField, k: i64, h: &HermitianIndex) -> Result<Rational> {
    HermitianEisenstein::new(field, k)?.e_coefficient(h)
}

pub fn hermitian_expansion(
    form: EisensteinNormalization,
    field: &ImagQuadField,
    k: i64,
    trace_bound: u32,
) -> Result<Expansion<HermitianLattice>> {
    HermitianEisenstein::new(field, k)?.expansion(form, trace_bound)
}

/// Hermitian cusp forms with explicit Eisenstein-series expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HermitianCuspForm {
    /// Weight 8, `d_K = −4`.
    Chi8,
    /// Weight 10, `d_K ∈ {−3, −4}`.
    F10,
    /// Weight 12, `d_K = −3`.
    F12,
}

impl fmt::Display for HermitianCuspForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HermitianCuspForm::Chi8 => "CHI8",
            HermitianCuspForm::F10 => "F10",
            HermitianCuspForm::F12 => "F12",
        })
    }
}

impl HermitianCuspForm {
    pub fn weight(self) -> i64 {
        match self {
            HermitianCuspForm::Chi8 => 8,
            HermitianCuspForm::F10 => 10,
            HermitianCuspForm::F12 => 12,
        }
    }
}

pub fn hermitian_cusp_form(
    name: HermitianCuspForm,
    field: &ImagQuadField,
    trace_bound: u32,
) -> Result<Expansion<HermitianLattice>> {
    let e = |k: i64| hermitian_expansion(EisensteinNormalization::E, field, k, trace_bound);
    match (name, field.disc()) {
        (HermitianCuspForm::Chi8, -4) => {
            let diff = e(8)?.sub(&e(4)?.pow(2))?;
            Ok(diff.scale(&Rational::new(-61, 230400)))
        }
        (HermitianCuspForm::F10, -4) => {
            let diff = e(10)?.sub(&e(4)?.multiply(&e(6)?)?)?;
            Ok(diff.scale(&Rational::new(-277, 2419200)))
        }
        (HermitianCuspForm::F10, -3) => {
            let diff = e(10)?.sub(&e(4)?.multiply(&e(6)?)?)?;
            Ok(diff.scale(&Rational::new(-809, 21772800)))
        }
        (HermitianCuspForm::F12, -3) => {
            let e4 = e(4)?;
            let e6 = e(6)?;
            let diff = e(12)?
                .sub(&e4.pow(3).scale(&Rational::new(441, 691)))?
                .sub(&e6.pow(2).scale(&Rational::new(250, 691)))?;
            Ok(diff.scale(&Rational::new(-1276277, 36578304000i64)))
        }
        _ => Err(Error::UnsupportedFieldForm {
            form: name.to_string(),
            disc: field.disc(),
        }),
    }
}
