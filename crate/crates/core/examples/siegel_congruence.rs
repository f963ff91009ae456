//! Siegel Eisenstein series of degree 2 versus Igusa's cusp forms:
//! G₁₀ ≡ λ·X₁₀ (mod 43867) and G₁₂ ≡ λ·X₁₂ (mod 131·593).

use modform_congruences::congruence::{solve_lambda, Modulus};
use modform_congruences::siegel::{igusa_x10, igusa_x12, siegel_expansion};
use modform_congruences::{EisensteinNormalization, SiegelIndex};

fn main() -> modform_congruences::Result<()> {
    let bound = 3;
    let g10 = siegel_expansion(EisensteinNormalization::G, 10, bound)?;
    let g12 = siegel_expansion(EisensteinNormalization::G, 12, bound)?;
    let t = SiegelIndex::new(1, 1, 1);
    println!("a_G10(1,1,1) = {}, a_G12(1,1,1) = {}", g10.coeff(&t)?, g12.coeff(&t)?);

    for (name, g, x, m) in [("G10", &g10, igusa_x10(bound), 43867), ("G12", &g12, igusa_x12(bound), 131 * 593)] {
        let report = solve_lambda(g, &x, Modulus::new(m)?)?;
        println!(
            "{name} ≡ {} · X (mod {m}): {} at {} indices",
            report.signed_lambda(),
            if report.verified { "holds" } else { "fails" },
            report.indices_checked
        );
    }
    Ok(())
}
