//! Truncated Fourier expansions over a positive-semidefinite index lattice.
//!
//! An [`Expansion`] stores the coefficients `a(T)` for every psd index `T`
//! with `trace(T) <= trace_bound`, omitting zeros. Lookup of an absent
//! in-bound index gives exact zero; lookup beyond the bound is an error.
//!
//! Three lattices implement [`IndexLattice`]: the degree-1 exponents
//! ([`EllipticLattice`]), half-integral 2x2 matrices
//! ([`crate::siegel::SiegelLattice`]) and the Hermitian lattice of an imaginary
//! quadratic field ([`crate::hermitian::HermitianLattice`]).

mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;

use crate::arith::Rational;
use crate::error::{Error, Result};

pub use text::{parse_any, AnyExpansion};

/// Which family of Fourier indices an expansion lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    Elliptic,
    Siegel,
    Hermitian(i64),
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Elliptic => f.write_str("elliptic"),
            Space::Siegel => f.write_str("siegel"),
            Space::Hermitian(d) => write!(f, "hermitian:{d}"),
        }
    }
}

/// The capabilities a Fourier index lattice must provide.
///
/// `Index`'s `Ord` is the canonical order: by trace first, then by the
/// index's integer tuple. Every enumeration returns indices in that order.
pub trait IndexLattice: Clone + fmt::Debug + PartialEq {
    type Index: Clone + Ord + Hash + fmt::Debug;

    fn space(&self) -> Space;

    fn zero(&self) -> Self::Index;

    fn trace(&self, index: &Self::Index) -> u32;

    fn is_psd(&self, index: &Self::Index) -> bool;

    /// True when the index has determinant zero (rank < full).
    fn is_singular(&self, index: &Self::Index) -> bool;

    /// `t - s`, provided the difference is again positive semidefinite.
    fn checked_sub(&self, t: &Self::Index, s: &Self::Index) -> Option<Self::Index>;

    /// Every psd index of trace at most `bound`, in canonical order.
    fn enumerate_all(&self, bound: u32) -> Vec<Self::Index>;

    /// Every `s` with `s >= 0` and `t - s >= 0`, in canonical order.
    fn enumerate_summands(&self, t: &Self::Index) -> Vec<Self::Index>;

    fn key(&self, index: &Self::Index) -> String;

    fn parse_key(&self, key: &str) -> Option<Self::Index>;

    /// The index of `diag(t, 0)`; for degree one, `t` itself.
    fn diag_embed(&self, t: u32) -> Self::Index;
}

/// Degree-2 lattices, on which the Φ-operator is defined.
pub trait Degree2Lattice: IndexLattice {}

/// Degree-one exponents `t >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EllipticLattice;

impl IndexLattice for EllipticLattice {
    type Index = u32;

    fn space(&self) -> Space {
        Space::Elliptic
    }

    fn zero(&self) -> u32 {
        0
    }

    fn trace(&self, index: &u32) -> u32 {
        *index
    }

    fn is_psd(&self, _index: &u32) -> bool {
        true
    }

    fn is_singular(&self, index: &u32) -> bool {
        *index == 0
    }

    fn checked_sub(&self, t: &u32, s: &u32) -> Option<u32> {
        t.checked_sub(*s)
    }

    fn enumerate_all(&self, bound: u32) -> Vec<u32> {
        (0..=bound).collect()
    }

    fn enumerate_summands(&self, t: &u32) -> Vec<u32> {
        (0..=*t).collect()
    }

    fn key(&self, index: &u32) -> String {
        index.to_string()
    }

    fn parse_key(&self, key: &str) -> Option<u32> {
        key.trim().parse().ok()
    }

    fn diag_embed(&self, t: u32) -> u32 {
        t
    }
}

/// A Fourier expansion truncated at a trace bound.
#[derive(Debug, Clone, PartialEq)]
pub struct Expansion<L: IndexLattice> {
    lattice: L,
    weight: i64,
    trace_bound: u32,
    coeffs: BTreeMap<L::Index, Rational>,
}

impl<L: IndexLattice> Expansion<L> {
    pub fn zero(lattice: L, weight: i64, trace_bound: u32) -> Self {
        Expansion {
            lattice,
            weight,
            trace_bound,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant series 1 (weight 0).
    pub fn one(lattice: L, trace_bound: u32) -> Self {
        let mut e = Self::zero(lattice, 0, trace_bound);
        let z = e.lattice.zero();
        e.coeffs.insert(z, Rational::one());
        e
    }

    /// Evaluates `coeff` on every psd index of trace at most `trace_bound`.
    pub fn from_fn<F>(lattice: L, weight: i64, trace_bound: u32, mut coeff: F) -> Result<Self>
    where
        F: FnMut(&L::Index) -> Result<Rational>,
    {
        let mut coeffs = BTreeMap::new();
        for index in lattice.enumerate_all(trace_bound) {
            let c = coeff(&index)?;
            if !c.is_zero() {
                coeffs.insert(index, c);
            }
        }
        Ok(Expansion {
            lattice,
            weight,
            trace_bound,
            coeffs,
        })
    }

    /// Builds an expansion from explicit entries, validating each index.
    pub fn from_entries<I>(lattice: L, weight: i64, trace_bound: u32, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (L::Index, Rational)>,
    {
        let mut e = Self::zero(lattice, weight, trace_bound);
        for (index, c) in entries {
            e.check_in_bound(&index)?;
            if !c.is_zero() {
                e.coeffs.insert(index, c);
            }
        }
        Ok(e)
    }

    pub fn lattice(&self) -> &L {
        &self.lattice
    }

    pub fn space(&self) -> Space {
        self.lattice.space()
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn trace_bound(&self) -> u32 {
        self.trace_bound
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero coefficients in canonical index order.
    pub fn nonzero(&self) -> impl Iterator<Item = (&L::Index, &Rational)> {
        self.coeffs.iter()
    }

    /// Every in-bound index (zeros included), in canonical order.
    pub fn indices(&self) -> Vec<L::Index> {
        self.lattice.enumerate_all(self.trace_bound)
    }

    fn check_in_bound(&self, index: &L::Index) -> Result<()> {
        if !self.lattice.is_psd(index) {
            return Err(Error::NotPositiveSemidefinite(self.lattice.key(index)));
        }
        if self.lattice.trace(index) > self.trace_bound {
            return Err(Error::OutOfTruncation {
                index: self.lattice.key(index),
                trace_bound: self.trace_bound,
            });
        }
        Ok(())
    }

    /// The coefficient at `index`; errors outside the truncation.
    pub fn coeff(&self, index: &L::Index) -> Result<Rational> {
        self.check_in_bound(index)?;
        Ok(self.coeff_unchecked(index))
    }

    fn coeff_unchecked(&self, index: &L::Index) -> Rational {
        self.coeffs.get(index).cloned().unwrap_or_else(Rational::zero)
    }

    /// Restricts to a smaller trace bound.
    pub fn truncate(&self, trace_bound: u32) -> Self {
        let trace_bound = trace_bound.min(self.trace_bound);
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(i, _)| self.lattice.trace(i) <= trace_bound)
            .map(|(i, c)| (i.clone(), c.clone()))
            .collect();
        Expansion {
            lattice: self.lattice.clone(),
            weight: self.weight,
            trace_bound,
            coeffs,
        }
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if self.lattice != other.lattice {
            return Err(Error::SpaceMismatch(self.space(), other.space()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        if self.weight != other.weight {
            return Err(Error::WeightMismatch(self.weight, other.weight));
        }
        let trace_bound = self.trace_bound.min(other.trace_bound);
        let mut out = self.truncate(trace_bound);
        for (i, c) in other.coeffs.iter() {
            if self.lattice.trace(i) > trace_bound {
                continue;
            }
            let sum = out.coeff_unchecked(i) + c;
            if sum.is_zero() {
                out.coeffs.remove(i);
            } else {
                out.coeffs.insert(i.clone(), sum);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let coeffs = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.coeffs.iter().map(|(i, a)| (i.clone(), a * c)).collect()
        };
        Expansion {
            lattice: self.lattice.clone(),
            weight: self.weight,
            trace_bound: self.trace_bound,
            coeffs,
        }
    }

    /// Product by summand enumeration: `a_{fg}(T) = Σ_S a_f(S) a_g(T − S)`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let trace_bound = self.trace_bound.min(other.trace_bound);
        let mut coeffs = BTreeMap::new();
        for t in self.lattice.enumerate_all(trace_bound) {
            let mut acc = Rational::zero();
            for s in self.lattice.enumerate_summands(&t) {
                let Some(a) = self.coeffs.get(&s) else { continue };
                let rest = self
                    .lattice
                    .checked_sub(&t, &s)
                    .expect("summand enumeration yields psd complements");
                if let Some(b) = other.coeffs.get(&rest) {
                    acc += &(a * b);
                }
            }
            if !acc.is_zero() {
                coeffs.insert(t, acc);
            }
        }
        Ok(Expansion {
            lattice: self.lattice.clone(),
            weight: self.weight + other.weight,
            trace_bound,
            coeffs,
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Expansion::one(self.lattice.clone(), self.trace_bound);
        for _ in 0..exp {
            acc = acc.multiply(self).expect("same lattice");
        }
        acc
    }

    pub fn serialize(&self) -> String {
        text::serialize(self)
    }
}

impl<L: Degree2Lattice> Expansion<L> {
    /// Siegel Φ-operator: the degree-one series of coefficients at `diag(t, 0)`.
    pub fn phi(&self) -> Expansion<EllipticLattice> {
        let coeffs = (0..=self.trace_bound)
            .filter_map(|t| {
                let c = self.coeff_unchecked(&self.lattice.diag_embed(t));
                (!c.is_zero()).then_some((t, c))
            })
            .collect();
        Expansion {
            lattice: EllipticLattice,
            weight: self.weight,
            trace_bound: self.trace_bound,
            coeffs,
        }
    }
}

impl Expansion<EllipticLattice> {
    /// Degree-one expansion from a coefficient list `c_0, c_1, ...`.
    pub fn from_series(weight: i64, coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        let trace_bound = coeffs.len() as u32 - 1;
        Expansion::from_entries(
            EllipticLattice,
            weight,
            trace_bound,
            coeffs.into_iter().enumerate().map(|(i, c)| (i as u32, c)),
        )
        .expect("degree-one indices are in bound")
    }

    pub fn series(&self) -> Vec<Rational> {
        (0..=self.trace_bound).map(|t| self.coeff_unchecked(&t)).collect()
    }
}
