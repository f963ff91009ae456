//! Exact Fourier coefficients of degree-2 Siegel and Hermitian Eisenstein
//! series, the cusp forms built from them, and Ramanujan-type congruences
//! between the two modulo (ir)regular primes.
//!
//! Every scalar is an exact [`arith::Rational`]; expansions are truncated by
//! trace and live in [`fourier::Expansion`].

pub mod arith;
pub mod cli;
pub mod congruence;
pub mod elliptic;
pub mod error;
pub mod fourier;
pub mod hermitian;
pub mod siegel;

pub use arith::Rational;
pub use error::{Error, Result};
pub use fourier::{AnyExpansion, EllipticLattice, Expansion, IndexLattice, Space};
pub use hermitian::{HermitianIndex, HermitianLattice, ImagQuadField};
pub use siegel::{EisensteinNormalization, SiegelIndex, SiegelLattice};
