//! Level-one elliptic modular forms as q-expansions: Eisenstein series, Δ and
//! Ramanujan's τ, and decomposition into isobaric polynomials in E₄, E₆.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::arith::{bernoulli, sigma, Rational};
use crate::error::{Error, Result};
use crate::fourier::{EllipticLattice, Expansion, IndexLattice};
use crate::siegel::check_weight;

/// Normalized `E_k = 1 − (2k/B_k) Σ σ_{k−1}(n) qⁿ` up to `q^{n_max}`.
pub fn elliptic_eisenstein(k: i64, n_max: u32) -> Result<Expansion<EllipticLattice>> {
    let kk = check_weight(k)?;
    let factor = -(Rational::from(2 * kk) / bernoulli(kk));
    let coeffs = (0..=n_max)
        .map(|n| {
            if n == 0 {
                Rational::one()
            } else {
                &factor * Rational::from(sigma(kk - 1, n as u64))
            }
        })
        .collect();
    Ok(Expansion::from_series(k, coeffs))
}

/// `Δ = (E₄³ − E₆²)/1728` up to `q^{n_max}`.
pub fn delta(n_max: u32) -> Expansion<EllipticLattice> {
    let e4 = elliptic_eisenstein(4, n_max).expect("weight 4");
    let e6 = elliptic_eisenstein(6, n_max).expect("weight 6");
    e4.pow(3)
        .sub(&e6.pow(2))
        .expect("both weight 12")
        .scale(&Rational::new(1, 1728))
}

/// `τ(1), …, τ(n_max)` as integers (index 0 holds τ(0) = 0).
pub fn tau_values(n_max: u32) -> Vec<BigInt> {
    delta(n_max)
        .series()
        .into_iter()
        .map(|c| c.to_integer().expect("Δ has integral coefficients"))
        .collect()
}

/// `dim M_k(SL₂(Z))` for even `k >= 0`.
pub fn level_one_dimension(k: i64) -> usize {
    if k < 0 || k % 2 == 1 || k == 2 {
        return 0;
    }
    let base = (k / 12) as usize;
    if k % 12 == 2 {
        base
    } else {
        base + 1
    }
}

/// `Q(X, Y) = Σ c_{a,b} X^a Y^b` with `4a + 6b = k` for every monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsobaricPolynomial {
    weight: i64,
    terms: BTreeMap<(u32, u32), Rational>,
}

impl IsobaricPolynomial {
    pub fn zero(weight: i64) -> Self {
        IsobaricPolynomial {
            weight,
            terms: BTreeMap::new(),
        }
    }

    /// Exponent pairs `(a, b)` with `4a + 6b = k`, by decreasing `a`.
    pub fn monomials(weight: i64) -> Vec<(u32, u32)> {
        if weight < 0 || weight % 2 == 1 {
            return Vec::new();
        }
        (0..=weight / 4)
            .rev()
            .filter(|a| (weight - 4 * a) % 6 == 0)
            .map(|a| (a as u32, ((weight - 4 * a) / 6) as u32))
            .collect()
    }

    pub fn from_terms<I>(weight: i64, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((u32, u32), Rational)>,
    {
        let mut p = Self::zero(weight);
        for ((a, b), c) in terms {
            if 4 * a as i64 + 6 * b as i64 != weight {
                return Err(Error::InvalidArgument(format!(
                    "monomial X^{a} Y^{b} does not have weight {weight}"
                )));
            }
            if !c.is_zero() {
                p.terms.insert((a, b), c);
            }
        }
        Ok(p)
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, a: u32, b: u32) -> Rational {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms by decreasing power of X.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter().rev()
    }

    /// `Q(e4, e6)` in the ring of `e4`/`e6`.
    pub fn evaluate<L: IndexLattice>(&self, e4: &Expansion<L>, e6: &Expansion<L>) -> Result<Expansion<L>> {
        let bound = e4.trace_bound().min(e6.trace_bound());
        let mut acc = Expansion::zero(e4.lattice().clone(), self.weight, bound);
        for (&(a, b), c) in self.terms.iter() {
            let mono = e4.pow(a).multiply(&e6.pow(b))?;
            acc = acc.add(&mono.scale(c))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for IsobaricPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(a, b), c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if a > 0 {
                write!(f, "*E4^{a}")?;
            }
            if b > 0 {
                write!(f, "*E6^{b}")?;
            }
        }
        Ok(())
    }
}

/// Solves `f = Q(E₄, E₆)` exactly over the monomial basis of weight `k`.
///
/// The expansion must carry at least `dim M_k` coefficients; after solving,
/// the residual has to vanish at every available coefficient.
pub fn decompose_into_e4_e6(f: &Expansion<EllipticLattice>, k: i64) -> Result<IsobaricPolynomial> {
    if f.weight() != k && !f.is_zero() {
        return Err(Error::WeightMismatch(f.weight(), k));
    }
    let not_in_space = |reason: String| Error::NotInSpace { weight: k, reason };
    let monomials = IsobaricPolynomial::monomials(k);
    if monomials.is_empty() {
        return if f.is_zero() {
            Ok(IsobaricPolynomial::zero(k))
        } else {
            Err(not_in_space("no monomials of this weight".into()))
        };
    }
    let n_max = f.trace_bound();
    if (n_max as usize + 1) < level_one_dimension(k) {
        return Err(not_in_space(format!(
            "{} coefficients cannot determine a {}-dimensional space",
            n_max + 1,
            level_one_dimension(k)
        )));
    }
    let e4 = elliptic_eisenstein(4, n_max)?;
    let e6 = elliptic_eisenstein(6, n_max)?;
    let columns: Vec<Vec<Rational>> = monomials
        .iter()
        .map(|&(a, b)| e4.pow(a).multiply(&e6.pow(b)).expect("degree one").series())
        .collect();
    let target = f.series();
    let solution = solve_exact(&columns, &target).ok_or_else(|| not_in_space("residual is nonzero".into()))?;
    IsobaricPolynomial::from_terms(k, monomials.into_iter().zip(solution))
}

/// Exact solve of `Σ_j x_j columns[j] = target` by Gaussian
/// elimination; `None` if the system is inconsistent.
fn solve_exact(columns: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let n_rows = target.len();
    let n_cols = columns.len();
    let mut m: Vec<Vec<Rational>> = (0..n_rows)
        .map(|i| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n_cols {
        let Some(p) = (row..n_rows).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].recip().expect("nonzero pivot");
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n_rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=n_cols {
                    let delta = &factor * &m[row][c];
                    m[r][c] -= &delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| !r[n_cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); n_cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][n_cols].clone();
    }
    Some(x)
}
