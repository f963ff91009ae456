use crate::elliptic::decompose_into_e4_e6;
use crate::error::Result;
use crate::fourier::{Degree2Lattice, Expansion};
use crate::hermitian::{hermitian_expansion, HermitianLattice};
use crate::siegel::{siegel_expansion, EisensteinNormalization, SiegelLattice};

/// Degree-2 lattices that carry normalized Eisenstein series E₄, E₆, ….
pub trait EisensteinFamily: Degree2Lattice {
    fn normalized_eisenstein(&self, k: i64, trace_bound: u32) -> Result<Expansion<Self>>;
}

impl EisensteinFamily for SiegelLattice {
    fn normalized_eisenstein(&self, k: i64, trace_bound: u32) -> Result<Expansion<Self>> {
        siegel_expansion(EisensteinNormalization::E, k, trace_bound)
    }
}

impl EisensteinFamily for HermitianLattice {
    fn normalized_eisenstein(&self, k: i64, trace_bound: u32) -> Result<Expansion<Self>> {
        hermitian_expansion(EisensteinNormalization::E, self.field(), k, trace_bound)
    }
}

/// `g − Q(E₄, E₆)` where `Φ(g) = Q(E₄⁽¹⁾, E₆⁽¹⁾)`; the result has `Φ = 0`.
pub fn cusp_correction<L: EisensteinFamily>(g: &Expansion<L>) -> Result<Expansion<L>> {
    let q = decompose_into_e4_e6(&g.phi(), g.weight())?;
    if q.is_zero() {
        return Ok(g.clone());
    }
    let bound = g.trace_bound();
    let e4 = g.lattice().normalized_eisenstein(4, bound)?;
    let e6 = g.lattice().normalized_eisenstein(6, bound)?;
    g.sub(&q.evaluate(&e4, &e6)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use crate::fourier::IndexLattice;
    use crate::siegel::igusa_x10;

    #[test]
    fn zero_stays_zero() {
        let z = Expansion::zero(SiegelLattice, 10, 2);
        assert!(cusp_correction(&z).unwrap().is_zero());
    }

    #[test]
    fn siegel_g10_is_multiple_of_x10() {
        let g = siegel_expansion(EisensteinNormalization::G, 10, 2).unwrap();
        let f = cusp_correction(&g).unwrap();
        let x10 = igusa_x10(2);
        let ratio = f.coeff(&crate::siegel::SiegelIndex::new(1, 1, 1)).unwrap();
        assert!(!ratio.is_zero());
        assert_eq!(f, x10.scale(&ratio));
        for t in SiegelLattice.enumerate_all(2) {
            if SiegelLattice.is_singular(&t) {
                assert_eq!(f.coeff(&t).unwrap(), Rational::zero());
            }
        }
    }
}
