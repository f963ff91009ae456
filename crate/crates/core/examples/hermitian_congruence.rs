//! Hermitian Eisenstein series over Q(i) and Q(√−3) against explicit cusp forms.

use modform_congruences::arith::PrimeLocalization;
use modform_congruences::congruence::solve_lambda;
use modform_congruences::hermitian::{hermitian_cusp_form, hermitian_expansion, HermitianCuspForm};
use modform_congruences::{EisensteinNormalization, ImagQuadField};

fn main() -> modform_congruences::Result<()> {
    let cases = [
        (-4, 8, HermitianCuspForm::Chi8, 61),
        (-4, 10, HermitianCuspForm::F10, 277),
        (-3, 10, HermitianCuspForm::F10, 809),
        (-3, 12, HermitianCuspForm::F12, 1847),
    ];
    for (d, k, cusp, p) in cases {
        let field = ImagQuadField::new(d)?;
        let g = hermitian_expansion(EisensteinNormalization::G, &field, k, 3)?;
        let f = hermitian_cusp_form(cusp, &field, 3)?;
        let report = solve_lambda(&g, &f, PrimeLocalization::new(p)?)?;
        println!(
            "d = {d}: G_{k} ≡ {} · {cusp} (mod {p}): {}",
            report.signed_lambda(),
            if report.verified { "holds" } else { "fails" }
        );
    }
    Ok(())
}
