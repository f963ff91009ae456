//! Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
//! exact (tolerance 0); congruences are checked at every index up to the
//! stated trace bound.

use std::process::ExitCode;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use modform_congruences::arith::{bernoulli, generalized_bernoulli, is_prime, Rational};
use modform_congruences::congruence::{
    condition_a_check, condition_b_primes, cusp_correction, irregular_pairs, nontriviality_witness, solve_lambda,
    verify_congruence, Modulus,
};
use modform_congruences::elliptic::tau_values;
use modform_congruences::hermitian::{
    hermitian_cusp_form, hermitian_expansion, hermitian_g_coefficient, HermitianCuspForm, CLASS_NUMBER_ONE_DISCRIMINANTS,
};
use modform_congruences::siegel::{igusa_x10, igusa_x12, siegel_expansion, siegel_g_coefficient};
use modform_congruences::{
    EisensteinNormalization, Expansion, HermitianIndex, ImagQuadField, IndexLattice, SiegelIndex,
    SiegelLattice,
};

type Outcome = (bool, String);

/// A criterion outcome. `known` holds the analysis when a failure is exactly
/// the documented counterexample and the corrected statement was verified.
struct Verdict {
    pass: bool,
    detail: String,
    known: Option<String>,
}

impl From<Outcome> for Verdict {
    fn from((pass, detail): Outcome) -> Self {
        Verdict { pass, detail, known: None }
    }
}

// B_{n,χ} = N/D for n = 1, 3, …, 15, with the primes listed for condition (B).
struct Row(&'static str, i64, &'static [u128]);

const TABLE: [(i64, [Row; 8]); 9] = [
    (-3, [
        Row("-1", 3, &[]),
        Row("2", 3, &[]),
        Row("-2*5", 3, &[]),
        Row("2*7^2", 3, &[]),
        Row("-2*809", 3, &[809]),
        Row("2*11*1847", 3, &[1847]),
        Row("-2*7*13^3*47", 3, &[47]),
        Row("2*5*419*16519", 3, &[419, 16519]),
    ]),
    (-4, [
        Row("-1", 2, &[]),
        Row("3", 2, &[]),
        Row("-5^2", 2, &[]),
        Row("7*61", 2, &[61]),
        Row("-3^2*5*277", 2, &[277]),
        Row("11*19*2659", 2, &[19, 2659]),
        Row("-5*13^2*43*967", 2, &[43, 967]),
        Row("3*5*47*4241723", 2, &[47, 4241723]),
    ]),
    (-7, [
        Row("-1", 1, &[]),
        Row("2^4*3", 7, &[]),
        Row("-2^5*5", 1, &[]),
        Row("2^4*7*73", 1, &[73]),
        Row("-2^6*3^2*8831", 7, &[8831]),
        Row("2^4*11^2*73*701", 1, &[73, 701]),
        Row("-2^5*13*173*266447", 1, &[173, 266447]),
        Row("2^4*3*5*145764975331", 7, &[145764975331]),
    ]),
    (-8, [
        Row("-1", 1, &[]),
        Row("3^2", 1, &[]),
        Row("-3*5*19", 1, &[19]),
        Row("3^2*7*307", 1, &[307]),
        Row("-3^3*83579", 1, &[83579]),
        Row("3*11^2*23*48197", 1, &[23, 48197]),
        Row("-3^2*13*113*811*9491", 1, &[113, 811, 9491]),
        Row("3^2*5*83*9275681267", 1, &[83, 9275681267]),
    ]),
    (-11, [
        Row("-1", 1, &[]),
        Row("2*3^2", 1, &[]),
        Row("-2*3*5^3*17", 11, &[17]),
        Row("2*3^2*7*17*71", 1, &[17, 71]),
        Row("-2*3^3*5^3*4999", 1, &[4999]),
        Row("2*3*11*43*269*14923", 1, &[43, 269, 14923]),
        Row("-2*3^2*5^2*13*787*1183579", 1, &[787, 1183579]),
        Row("2*3^2*5*428708869630871", 11, &[428708869630871]),
    ]),
    (-19, [
        Row("-1", 1, &[]),
        Row("2*3*11", 1, &[11]),
        Row("-2*5^2*269", 1, &[269]),
        Row("2*7^2*53*1021", 1, &[53, 1021]),
        Row("-2*3^2*5*13*67*851537", 19, &[13, 67, 851537]),
        Row("2*11^3*41*32427511", 1, &[41, 32427511]),
        Row("-2*5*7*11*13*149*3386245229", 1, &[149, 3386245229]),
        Row("2*3*5*829*1249187*312206737", 1, &[829, 1249187, 312206737]),
    ]),
    (-43, [
        Row("-1", 1, &[]),
        Row("2*3*83", 1, &[83]),
        Row("-2*5*29*31*59", 1, &[29, 31, 59]),
        Row("2*7*76565663", 1, &[76565663]),
        Row("-2*3^2*202075601281", 1, &[202075601281]),
        Row("2*11^2*13^2*509*901553753", 1, &[509, 901553753]),
        Row("-2*13^2*405842695582800517", 1, &[405842695582800517]),
        Row("2*3*5*223*2791*25889*113167*24665497", 1, &[223, 2791, 25889, 113167, 24665497]),
    ]),
    (-67, [
        Row("-1", 1, &[]),
        Row("2*3*251", 1, &[251]),
        Row("-2*5*19^2*23*47", 1, &[19, 23, 47]),
        Row("2*7*1367650871", 1, &[1367650871]),
        Row("-2*3^2*151*58035119431", 1, &[151, 58035119431]),
        Row("2*11*3272681*27444275311", 1, &[3272681, 27444275311]),
        Row("-2*13*73*1439*56783*226088481721", 1, &[73, 1439, 56783, 226088481721]),
        Row("2*3*5*541355166251*51558395838661", 1, &[541355166251, 51558395838661]),
    ]),
    (-163, [
        Row("-1", 1, &[]),
        Row("2*3*5*463", 1, &[463]),
        Row("-2*5*13^2*281*449", 1, &[13, 281, 449]),
        Row("2*5^3*7*3538330867", 1, &[3538330867]),
        Row("-2*3^2*47*1213*294217150811", 1, &[47, 1213, 294217150811]),
        Row("2*5*11*29^2*179*379*3566823499667", 1, &[29, 179, 379, 3566823499667]),
        Row("-2*13*103*172357*1097359*1883639*2464211", 1, &[103, 172357, 1097359, 1883639, 2464211]),
        Row("2*3*5^2*358181*6185071975972339006627199", 1, &[358181, 6185071975972339006627199]),
    ]),
];

fn eval_product(s: &str) -> BigInt {
    let (sign, body) = s.strip_prefix('-').map_or((1, s), |rest| (-1, rest));
    body.split('*').fold(BigInt::from(sign), |acc, factor| {
        let (base, exp) = factor.split_once('^').unwrap_or((factor, "1"));
        acc * base.parse::<BigInt>().unwrap().pow(exp.parse::<u32>().unwrap())
    })
}

fn field(d: i64) -> ImagQuadField {
    ImagQuadField::new(d).unwrap()
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn table_equalities() -> Outcome {
    let mut matched = 0;
    let mut mismatches = Vec::new();
    for (d, rows) in &TABLE {
        for (i, Row(numer, denom, _)) in rows.iter().enumerate() {
            let n = 2 * i as u32 + 1;
            let want = Rational::from(eval_product(numer)) / Rational::from(*denom);
            let got = generalized_bernoulli(n, *d).unwrap();
            if got == want {
                matched += 1;
            } else {
                mismatches.push(format!("d={d} n={n}: {got} != {want}"));
            }
        }
    }
    (
        matched == 72,
        format!("{matched}/72 exact equalities, tolerance 0 {}", mismatches.join("; ")),
    )
}

const SIEGEL_INDICES: [SiegelIndex; 4] = [
    SiegelIndex { a: 1, b2: 1, c: 1 },
    SiegelIndex { a: 1, b2: 0, c: 1 },
    SiegelIndex { a: 1, b2: 1, c: 2 },
    SiegelIndex { a: 1, b2: 0, c: 2 },
];

fn siegel_values() -> Outcome {
    let g10 = [r(-1618, 27), r(-1385, 2), r(-565184, 7), r(-250737, 1)];
    // 50521/2 at 1₂; the value 5052/2 fails the weight-12 congruence (checked in criterion 3).
    let g12 = [r(3694, 3), r(50521, 2), r(9006448, 1), r(36581523, 1)];
    let x10 = [1, -2, -16, 36].map(Rational::from);
    let x12 = [1, 10, -88, -132].map(Rational::from);
    let (ex10, ex12) = (igusa_x10(3), igusa_x12(3));
    let mut ok = 0;
    let mut bad = Vec::new();
    for (i, t) in SIEGEL_INDICES.iter().enumerate() {
        let checks = [
            ("G10", siegel_g_coefficient(10, t).unwrap(), &g10[i]),
            ("G12", siegel_g_coefficient(12, t).unwrap(), &g12[i]),
            ("X10", ex10.coeff(t).unwrap(), &x10[i]),
            ("X12", ex12.coeff(t).unwrap(), &x12[i]),
        ];
        for (name, got, want) in checks {
            if &got == want {
                ok += 1;
            } else {
                bad.push(format!("{name}({t}) = {got}, expected {want}"));
            }
        }
    }
    (ok == 16, format!("{ok}/16 exact values, tolerance 0 {}", bad.join("; ")))
}

fn congruence_outcome<L: IndexLattice>(
    name: &str,
    f: &Expansion<L>,
    g: &Expansion<L>,
    m: u64,
    lambda: i64,
) -> (bool, String) {
    let modulus = Modulus::new(m).unwrap();
    let l = lambda.rem_euclid(m as i64) as u64;
    let all = f.lattice().enumerate_all(f.trace_bound().min(g.trace_bound())).len();
    let verified = verify_congruence(f, g, modulus.clone(), l).unwrap();
    let solved = solve_lambda(f, g, modulus).unwrap();
    let pass = verified.verified && verified.indices_checked == all && solved.verified && solved.lambda == l;
    (
        pass,
        format!(
            "{name} mod {m}: λ={} solved={} at {}/{all} indices",
            lambda, solved.lambda, verified.indices_checked
        ),
    )
}

fn siegel_congruences() -> Outcome {
    let g10 = siegel_expansion(EisensteinNormalization::G, 10, 3).unwrap();
    let g12 = siegel_expansion(EisensteinNormalization::G, 12, 3).unwrap();
    let a = congruence_outcome("G10≡λX10", &g10, &igusa_x10(3), 43867, 11313);
    let b = congruence_outcome("G12≡λX12", &g12, &igusa_x12(3), 131 * 593, 53020);
    let typo_rejected = modform_congruences::congruence::rational_mod_p(&r(5052, 2), 77683) != Some(530200 % 77683);
    (
        a.0 && b.0 && typo_rejected,
        format!("{}; {}; 5052/2 rejected: {typo_rejected}; trace <= 3", a.1, b.1),
    )
}

struct HermitianCase {
    disc: i64,
    k: i64,
    cusp: HermitianCuspForm,
    p: u64,
    lambda: i64,
    g: [i64; 4],
    f: [i64; 4],
}

// d = −3: β = 1 at the off-diagonal 1/(√3 i); d = −4: β = i − 1 at (1+i)/2 and β = i at 1/2.
const D3: [HermitianIndex; 4] = [
    HermitianIndex { a: 1, x: 1, y: 0, c: 1 },
    HermitianIndex { a: 1, x: 0, y: 0, c: 1 },
    HermitianIndex { a: 1, x: 1, y: 0, c: 2 },
    HermitianIndex { a: 1, x: 0, y: 0, c: 2 },
];
const D4: [HermitianIndex; 4] = [
    HermitianIndex { a: 1, x: 1, y: 1, c: 1 },
    HermitianIndex { a: 1, x: 2, y: 1, c: 1 },
    HermitianIndex { a: 1, x: 0, y: 0, c: 1 },
    HermitianIndex { a: 1, x: 1, y: 1, c: 2 },
];

const HERMITIAN_CASES: [HermitianCase; 4] = [
    HermitianCase {
        disc: -3,
        k: 10,
        cusp: HermitianCuspForm::F10,
        p: 809,
        lambda: 554,
        g: [-255, -6560, -390624, -1673310],
        f: [1, -6, -10, 90],
    },
    HermitianCase {
        disc: -3,
        k: 12,
        cusp: HermitianCuspForm::F12,
        p: 1847,
        lambda: 824,
        g: [-1023, -59048, -9765624, -60408150],
        f: [1, 18, -106, -54],
    },
    HermitianCase {
        disc: -4,
        k: 8,
        cusp: HermitianCuspForm::Chi8,
        p: 61,
        lambda: -2,
        g: [-63, -728, -4095, -47320],
        f: [1, -2, 4, -8],
    },
    HermitianCase {
        disc: -4,
        k: 10,
        cusp: HermitianCuspForm::F10,
        p: 277,
        lambda: 22,
        g: [-255, -6560, -65535, -1685920],
        f: [1, 4, -20, -80],
    },
];

fn hermitian_values_and_congruences() -> Outcome {
    let mut g_ok = 0;
    let mut f_ok = 0;
    let mut cong_ok = 0;
    let mut notes = Vec::new();
    for case in &HERMITIAN_CASES {
        let k_field = field(case.disc);
        let idx = if case.disc == -3 { D3 } else { D4 };
        let g = hermitian_expansion(EisensteinNormalization::G, &k_field, case.k, 3).unwrap();
        let f = hermitian_cusp_form(case.cusp, &k_field, 3).unwrap();
        for (i, h) in idx.iter().enumerate() {
            let gv = g.coeff(h).unwrap();
            let fv = f.coeff(h).unwrap();
            if gv == Rational::from(case.g[i]) {
                g_ok += 1;
            } else {
                notes.push(format!("G d={} k={} {h}: {gv}", case.disc, case.k));
            }
            if fv == Rational::from(case.f[i]) {
                f_ok += 1;
            } else {
                notes.push(format!("{} d={} {h}: {fv}", case.cusp, case.disc));
            }
        }
        let (pass, msg) = congruence_outcome(&format!("d={} G{}", case.disc, case.k), &g, &f, case.p, case.lambda);
        cong_ok += usize::from(pass);
        if !pass {
            notes.push(msg);
        }
    }
    (
        g_ok == 16 && f_ok == 16 && cong_ok == 4,
        format!(
            "{g_ok}/16 G values, {f_ok}/16 cusp-form values, {cong_ok}/4 congruences at trace <= 3, tolerance 0 {}",
            notes.join("; ")
        ),
    )
}

/// τ(n) from q·∏(1 − qⁿ)²⁴, independent of the Eisenstein route.
fn tau_by_product(n_max: usize) -> Vec<BigInt> {
    let mut series = vec![BigInt::zero(); n_max + 1];
    series[0] = BigInt::one();
    for n in 1..=n_max {
        for _ in 0..24 {
            for i in (n..=n_max).rev() {
                let prev = series[i - n].clone();
                series[i] -= prev;
            }
        }
    }
    let mut tau = vec![BigInt::zero(); n_max + 1];
    tau[1..].clone_from_slice(&series[..n_max]);
    tau
}

fn ramanujan() -> Outcome {
    let tau = tau_values(200);
    let oracle = tau_by_product(200);
    let agree = tau == oracle;
    let p = BigInt::from(691);
    let bad: Vec<u64> = (1..=200u64)
        .filter(|&n| {
            let sigma: BigInt = (1..=n).filter(|d| n % d == 0).map(|d| BigInt::from(d).pow(11)).sum();
            !((sigma - &tau[n as usize]) % &p).is_zero()
        })
        .collect();
    (
        agree && bad.is_empty(),
        format!("τ matches product oracle: {agree}; σ_11 ≡ τ mod 691 fails at {} of 200 n", bad.len()),
    )
}

fn cusp_zero<L: modform_congruences::fourier::Degree2Lattice>(name: &str, f: &Expansion<L>) -> Option<String> {
    let lat = f.lattice();
    let nonzero_singular = lat
        .enumerate_all(f.trace_bound())
        .into_iter()
        .filter(|t| lat.is_singular(t))
        .find(|t| !f.coeff(t).unwrap().is_zero());
    match (nonzero_singular, f.phi().is_zero()) {
        (None, true) => None,
        (Some(t), _) => Some(format!("{name}: nonzero at {}", lat.key(&t))),
        (None, false) => Some(format!("{name}: Φ ≠ 0")),
    }
}

fn cusp_property() -> Outcome {
    let bound = 4;
    let mut failures = Vec::new();
    failures.extend(cusp_zero("X10", &igusa_x10(bound)));
    failures.extend(cusp_zero("X12", &igusa_x12(bound)));
    for (form, d) in [
        (HermitianCuspForm::Chi8, -4),
        (HermitianCuspForm::F10, -4),
        (HermitianCuspForm::F10, -3),
        (HermitianCuspForm::F12, -3),
    ] {
        let f = hermitian_cusp_form(form, &field(d), bound).unwrap();
        failures.extend(cusp_zero(&format!("{form} d={d}"), &f));
    }
    (
        failures.is_empty(),
        format!("6 forms, every det = 0 index up to trace {bound} exactly zero, Φ = 0 {}", failures.join("; ")),
    )
}

/// E_k⁽¹⁾ = 1 + c_k Σ σ_{k−1}(n) qⁿ with the classical constants c_k = −2k/B_k.
fn elliptic_oracle(k: u32, n_max: u64) -> Vec<Rational> {
    let c = match k {
        4 => r(240, 1),
        6 => r(-504, 1),
        8 => r(480, 1),
        10 => r(-264, 1),
        12 => r(65520, 691),
        _ => unreachable!(),
    };
    (0..=n_max)
        .map(|n| {
            if n == 0 {
                return Rational::one();
            }
            let s: BigInt = (1..=n).filter(|d| n % d == 0).map(|d| BigInt::from(d).pow(k - 1)).sum();
            c.clone() * Rational::from(s)
        })
        .collect()
}

fn phi_compatibility() -> Outcome {
    let bound = 4;
    let mut checked = 0;
    let mut bad = Vec::new();
    for k in [4u32, 6, 8, 10, 12] {
        let oracle = elliptic_oracle(k, bound as u64);
        let siegel = siegel_expansion(EisensteinNormalization::E, k as i64, bound).unwrap();
        checked += 1;
        if siegel.phi().series() != oracle {
            bad.push(format!("siegel k={k}"));
        }
        for d in CLASS_NUMBER_ONE_DISCRIMINANTS {
            let e = hermitian_expansion(EisensteinNormalization::E, &field(d), k as i64, bound).unwrap();
            checked += 1;
            if e.phi().series() != oracle {
                bad.push(format!("d={d} k={k}"));
            }
        }
    }
    (
        bad.is_empty(),
        format!("{}/{checked} series agree up to trace {bound}, tolerance 0 {}", checked - bad.len(), bad.join(", ")),
    )
}

fn maass_integrality() -> Verdict {
    let mut checked = 0;
    let mut bad = Vec::new();
    for k in [4i64, 6, 10, 12] {
        let scale = Rational::from(bernoulli((2 * k - 2) as u32).denom().clone() * 2);
        for t in SiegelLattice.enumerate_all(4).into_iter().filter(|t| t.det4() > 0) {
            checked += 1;
            let v = siegel_g_coefficient(k, &t).unwrap() * &scale;
            if !v.is_integer() {
                bad.push((k, t, v));
            }
        }
    }
    let detail = format!(
        "{}/{checked} rank-2 coefficients integral after scaling by 2·den(B_(2k-2)); first violations: {}",
        checked - bad.len(),
        bad.iter().take(3).map(|(k, t, v)| format!("k={k} T={t} → {v}")).collect::<Vec<_>>().join(", ")
    );
    if bad.is_empty() {
        return Verdict { pass: true, detail, known: None };
    }
    // The published a_G10((1,½;½,1)) = −1618/27 already violates the scaled
    // statement: 2·798·(−1618/27) = −860776/9. What the congruence argument
    // needs is p-integrality for the irregular pairs (p, 2k−2).
    let published = siegel_g_coefficient(10, &SiegelIndex::new(1, 1, 1)).unwrap() == r(-1618, 27);
    let witnessed = bad
        .iter()
        .any(|(k, t, v)| *k == 10 && *t == SiegelIndex::new(1, 1, 1) && *v == r(-860776, 9));
    let mut local_ok = true;
    let mut pairs = Vec::new();
    // Irregular pairs (p, 2k−2) for the weights in range; B_6 and B_10 have none.
    for (k, p) in [(10i64, 43867i64), (12, 131), (12, 593)] {
        let bk = bernoulli((2 * k - 2) as u32);
        local_ok &= (bk.numer() % BigInt::from(p)).is_zero();
        pairs.push(format!("({p},{})", 2 * k - 2));
        for t in SiegelLattice.enumerate_all(4).into_iter().filter(|t| t.det4() > 0) {
            let v = siegel_g_coefficient(k, &t).unwrap();
            local_ok &= !(v.denom() % p).is_zero();
        }
    }
    let known = (published && witnessed && local_ok).then(|| {
        format!(
            "unattainable as stated: it contradicts the published value a_G10(1,1,1) = -1618/27 (scaled: -860776/9); \
             the p-local consequence a_G_k(T) ∈ Z_(p) holds for the irregular pairs {} at all rank-2 T, trace <= 4",
            pairs.join(" ")
        )
    });
    Verdict { pass: false, detail, known }
}

fn scanners() -> Verdict {
    let pair = irregular_pairs(700).contains(&(691, 12));
    let mut missing = Vec::new();
    let mut unlisted = Vec::new();
    let mut empty_at_8 = Vec::new();
    let mut fails_a = Vec::new();
    let mut existence = 0;
    let mut reproduced = 0;
    for (d, rows) in &TABLE {
        let k_field = field(*d);
        let scan = condition_b_primes(&k_field, 16);
        for (i, Row(_, _, listed)) in rows.iter().enumerate() {
            let k = 2 * i as u32 + 2;
            let found = scan.get(&k).cloned().unwrap_or_default();
            for &p in listed.iter().filter(|&&p| p < 10_000_000) {
                if found.contains(&p) {
                    reproduced += 1;
                } else {
                    missing.push(format!("d={d} k={k} p={p}"));
                }
            }
            unlisted.extend(found.iter().filter(|p| !listed.contains(p)).map(|p| format!("d={d} k={k} p={p}")));
        }
        if *d != -3 {
            let at8 = &scan[&8];
            if at8.is_empty() {
                empty_at_8.push(*d);
            }
            let passing = at8.iter().filter(|&&p| condition_a_check(&k_field, p as u64)).count();
            existence += usize::from(passing > 0);
            fails_a.extend(at8.iter().filter(|&&p| !condition_a_check(&k_field, p as u64)).map(|&p| (*d, p)));
        }
    }
    let core = pair && missing.is_empty() && unlisted.is_empty() && empty_at_8.is_empty();
    let detail = format!(
        "(691,12) found: {pair}; {reproduced} listed primes < 10^7 reproduced, missing {missing:?}, unlisted {unlisted:?}; \
         k = 8 nonempty for 8 fields: {}; entries failing (A): {fails_a:?}",
        empty_at_8.is_empty()
    );
    if core && fails_a.is_empty() {
        return Verdict { pass: true, detail, known: None };
    }
    // d = −11, k = 8 lists 17 and 71, but 17 | N(B_{5,χ}) = −2·3·5³·17.
    let b5 = generalized_bernoulli(5, -11).unwrap();
    let explained = fails_a == [(-11, 17)] && (b5.numer() % BigInt::from(17)).is_zero() && existence == 8;
    let known = (core && explained).then(|| {
        "unattainable as stated: d=-11, k=8 lists p=17 and 17 divides B_(5,χ) = -2·3·5^3·17/11; \
         the existence form (some k = 8 prime satisfies (A) and (B)) holds for all 8 fields"
            .to_string()
    });
    Verdict { pass: false, detail, known }
}

fn chi(d: i64, q: u64) -> i8 {
    field(d).character().value_u(q)
}

fn identity(d: i64, k: i64, q: u64) -> bool {
    let h = HermitianIndex::diag(1, q as i64);
    let e = (k - 2) as u32;
    let want = (BigInt::one() - BigInt::from(q).pow(e)) * (BigInt::one() + BigInt::from(d.abs()).pow(e));
    hermitian_g_coefficient(&field(d), k, &h).unwrap() == Rational::from(want)
}

fn witness_identity() -> Outcome {
    let mut notes = Vec::new();
    let mut identities = 0;
    for (d, k, p) in [(-3i64, 10u32, 809u64), (-3, 12, 1847), (-4, 8, 61), (-4, 10, 277)] {
        let w = nontriviality_witness(&field(d), k, p, 100_000).unwrap();
        let residue = BigInt::from(w.q).modpow(&BigInt::from(k - 2), &BigInt::from(p));
        let valid = is_prime(w.q) && chi(d, w.q) == -1 && residue != BigInt::one();
        if !valid || !identity(d, k as i64, w.q) {
            notes.push(format!("({d},{k},{p}) q={}", w.q));
        }
        for q in (2..200u64).filter(|&q| is_prime(q) && chi(d, q) == -1) {
            identities += 1;
            if !identity(d, k as i64, q) {
                notes.push(format!("identity ({d},{k}) q={q}"));
            }
        }
    }
    (
        notes.is_empty(),
        format!("4 witnesses valid; identity exact at {identities} (d, k, q) triples with χ(q) = -1 {}", notes.join("; ")),
    )
}

fn scalar_multiple<L: IndexLattice>(f: &Expansion<L>, g: &Expansion<L>) -> Option<Rational> {
    let (index, gv) = g.nonzero().next()?;
    let c = f.coeff(index).ok()? / gv.clone();
    (!c.is_zero() && *f == g.scale(&c)).then_some(c)
}

fn cusp_correction_oracle() -> Outcome {
    let g10 = siegel_expansion(EisensteinNormalization::G, 10, 3).unwrap();
    let siegel = scalar_multiple(&cusp_correction(&g10).unwrap(), &igusa_x10(3));
    let k3 = field(-3);
    let g12 = hermitian_expansion(EisensteinNormalization::G, &k3, 12, 3).unwrap();
    let f12 = hermitian_cusp_form(HermitianCuspForm::F12, &k3, 3).unwrap();
    let herm = scalar_multiple(&cusp_correction(&g12).unwrap(), &f12);
    let show = |c: &Option<Rational>| c.as_ref().map_or("none".to_string(), Rational::to_string);
    (
        siegel.is_some() && herm.is_some(),
        format!(
            "G10 → {}·X10, G12(d=-3) → {}·F12, coefficient-wise at trace <= 3",
            show(&siegel),
            show(&herm)
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 11] = [
        ("generalized Bernoulli table", || table_equalities().into()),
        ("Siegel G10/G12/X10/X12 values", || siegel_values().into()),
        ("Siegel congruences", || siegel_congruences().into()),
        ("Hermitian values and congruences", || hermitian_values_and_congruences().into()),
        ("σ_11 ≡ τ mod 691", || ramanujan().into()),
        ("cusp forms vanish at det 0", || cusp_property().into()),
        ("Φ-compatibility of E_k", || phi_compatibility().into()),
        ("Maass integrality", maass_integrality),
        ("scanners", scanners),
        ("witness and diag(1,q) identity", || witness_identity().into()),
        ("cusp correction oracle", || cusp_correction_oracle().into()),
    ];
    let mut passed = 0;
    let mut unexplained = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        println!("{} [{:>2}] {name}: {}", if v.pass { "PASS" } else { "FAIL" }, i + 1, v.detail);
        if v.pass {
            passed += 1;
        } else if let Some(analysis) = v.known {
            println!("          analysis: {analysis}");
        } else {
            unexplained += 1;
        }
    }
    println!(
        "{passed}/{} criteria passed; {} failed with a verified analysis; {unexplained} unexplained",
        criteria.len(),
        criteria.len() - passed - unexplained
    );
    if unexplained == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
