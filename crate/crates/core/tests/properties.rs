use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use modform_congruences::arith::{bernoulli, PrimeLocalization, Rational};
use modform_congruences::congruence::{condition_a_check, cusp_correction, irregular_pairs, solve_lambda, verify_congruence};
use modform_congruences::hermitian::{hermitian_expansion, HermitianEisenstein, CLASS_NUMBER_ONE_DISCRIMINANTS};
use modform_congruences::siegel::{igusa_x10, siegel_expansion, siegel_g_coefficient};
use modform_congruences::{
    EisensteinNormalization, Expansion, HermitianIndex, HermitianLattice, ImagQuadField,
    IndexLattice, SiegelIndex, SiegelLattice,
};

const ELEMENTARY: [[[i64; 2]; 2]; 4] = [[[1, 1], [0, 1]], [[1, 0], [1, 1]], [[0, 1], [1, 0]], [[1, 0], [0, -1]]];

fn compose(u: [[i64; 2]; 2], v: [[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let m = |i: usize, j: usize| u[i][0] * v[0][j] + u[i][1] * v[1][j];
    [[m(0, 0), m(0, 1)], [m(1, 0), m(1, 1)]]
}

fn unimodular() -> impl Strategy<Value = [[i64; 2]; 2]> {
    prop::collection::vec(0..ELEMENTARY.len(), 1..6)
        .prop_map(|w| w.into_iter().fold([[1, 0], [0, 1]], |acc, i| compose(acc, ELEMENTARY[i])))
}

fn siegel_index(max_trace: u32) -> impl Strategy<Value = SiegelIndex> {
    let all = SiegelLattice.enumerate_all(max_trace);
    (0..all.len()).prop_map(move |i| all[i])
}

fn field() -> impl Strategy<Value = ImagQuadField> {
    prop::sample::select(CLASS_NUMBER_ONE_DISCRIMINANTS.to_vec()).prop_map(|d| ImagQuadField::new(d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn siegel_g_is_unimodular_invariant(t in siegel_index(6), u in unimodular(), k in prop::sample::select(vec![4i64, 6, 8, 10, 12])) {
        let s = t.transform(u);
        prop_assert_eq!(siegel_g_coefficient(k, &t).unwrap(), siegel_g_coefficient(k, &s).unwrap());
    }

    #[test]
    fn hermitian_g_symmetries(f in field(), k in prop::sample::select(vec![4i64, 6, 8, 10]), pick in 0usize..1000) {
        let lattice = HermitianLattice::new(f.clone());
        let all = lattice.enumerate_all(4);
        let h = all[pick % all.len()];
        let g = HermitianEisenstein::new(&f, k).unwrap();
        let value = g.g_coefficient(&h).unwrap();
        prop_assert_eq!(&value, &g.g_coefficient(&lattice.conjugate(&h)).unwrap());
        prop_assert_eq!(&value, &g.g_coefficient(&lattice.swap(&h)).unwrap());
        let negated = HermitianIndex::new(h.a, -h.x, -h.y, h.c);
        prop_assert_eq!(&value, &g.g_coefficient(&negated).unwrap());
    }

    #[test]
    fn lambda_of_a_scalar_multiple(
        series in prop::collection::vec(-500i64..500, 2..12),
        c in 1i64..10_000,
        p in prop::sample::select(vec![61u64, 691, 43867]),
    ) {
        prop_assume!(series.iter().skip(1).any(|v| v.rem_euclid(p as i64) != 0));
        let g = Expansion::from_series(12, series.iter().map(|&v| Rational::from(v)).collect());
        let f = g.scale(&Rational::from(c));
        let report = solve_lambda(&f, &g, PrimeLocalization::new(p).unwrap()).unwrap();
        prop_assert!(report.verified);
        prop_assert_eq!(report.lambda, c as u64 % p);

        // scaling both sides of a verified congruence keeps it verified
        let s = Rational::from(c + 1);
        let scaled = verify_congruence(&f.scale(&s), &g, PrimeLocalization::new(p).unwrap(), (c as u64 * (c as u64 + 1)) % p).unwrap();
        prop_assert!(scaled.verified);
    }

    #[test]
    fn cusp_correction_kills_phi(a in -50i64..50, b in -50i64..50) {
        let bound = 2;
        let g10 = siegel_expansion(EisensteinNormalization::G, 10, bound).unwrap();
        let e4 = siegel_expansion(EisensteinNormalization::E, 4, bound).unwrap();
        let e6 = siegel_expansion(EisensteinNormalization::E, 6, bound).unwrap();
        let f = g10.scale(&Rational::from(a)).add(&e4.multiply(&e6).unwrap().scale(&Rational::from(b))).unwrap();
        let s = cusp_correction(&f).unwrap();
        prop_assert!(s.phi().is_zero());
    }
}

#[test]
fn siegel_product_is_unimodular_invariant() {
    let x10 = igusa_x10(5);
    for t in SiegelLattice.enumerate_all(3) {
        for u in ELEMENTARY.iter().flat_map(|&u| ELEMENTARY.map(|v| compose(u, v))) {
            let s = t.transform(u);
            if s.trace() <= 5 {
                assert_eq!(x10.coeff(&t).unwrap(), x10.coeff(&s).unwrap(), "{t} vs {s}");
            }
        }
    }
}

#[test]
fn siegel_g_depends_on_content_and_determinant() {
    let mut seen: BTreeMap<(u64, i64), Rational> = BTreeMap::new();
    for t in SiegelLattice.enumerate_all(10).into_iter().filter(|t| t.rank() > 0) {
        let v = siegel_g_coefficient(10, &t).unwrap();
        let key = (t.content(), t.det4());
        if let Some(prev) = seen.insert(key, v.clone()) {
            assert_eq!(prev, v, "T = {t}");
        }
    }
}

#[test]
fn hermitian_identity_coefficient() {
    for d in CLASS_NUMBER_ONE_DISCRIMINANTS {
        let f = ImagQuadField::new(d).unwrap();
        for k in [8i64, 10, 12] {
            let got = HermitianEisenstein::new(&f, k).unwrap().g_coefficient(&HermitianIndex::diag(1, 1)).unwrap();
            let want = Rational::from(1 - BigInt::from(d.abs()).pow(k as u32 - 2));
            assert_eq!(got, want, "d = {d}, k = {k}");
        }
    }
}

#[test]
fn small_eisenstein_series_are_p_integral_at_condition_a_primes() {
    let listed: [(i64, &[u64]); 4] = [(-4, &[61, 277]), (-7, &[73, 8831]), (-8, &[307, 83579]), (-19, &[269, 1021])];
    for (d, primes) in listed {
        let f = ImagQuadField::new(d).unwrap();
        for &p in primes.iter().filter(|&&p| condition_a_check(&f, p)) {
            for k in [4, 6] {
                let e = hermitian_expansion(EisensteinNormalization::E, &f, k, 4).unwrap();
                for (h, v) in e.nonzero() {
                    assert!((v.denom() % BigInt::from(p)) != BigInt::zero(), "d = {d}, k = {k}, p = {p}, H = {h}");
                }
            }
        }
    }
}

// Bernoulli numbers from Σ_{j<=m} C(m+1, j) B_j = 0, independent of the library's route.
fn bernoulli_by_sum(m_max: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = vec![Rational::from(1)];
    for m in 1..=m_max {
        let mut binom = BigInt::from(1);
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc = acc + Rational::from(binom.clone()) * bj.clone();
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-(acc / Rational::from(m as i64 + 1)));
    }
    b
}

#[test]
fn irregular_pairs_match_oracle() {
    let b = bernoulli_by_sum(300);
    for m in [2usize, 12, 22, 100] {
        assert_eq!(bernoulli(m as u32), b[m]);
    }
    let mut oracle = Vec::new();
    for p in (3u64..=300).filter(|&p| (2..p).take_while(|q| q * q <= p).all(|q| p % q != 0)) {
        for m in (2..p as usize).step_by(2) {
            if (b[m].numer() % BigInt::from(p)).is_zero() {
                oracle.push((p, m as u32));
            }
        }
    }
    assert_eq!(irregular_pairs(300), oracle);
    let known = [
        (37, 32), (59, 44), (67, 58), (101, 68), (103, 24), (131, 22), (149, 130), (157, 62), (157, 110),
        (233, 84), (257, 164), (263, 100), (271, 84), (283, 20), (293, 156),
    ];
    assert_eq!(oracle, known.to_vec());
}
