//! Removing the Eisenstein part of G_k leaves a cusp form; in weights 10 and 12
//! the result is a rational multiple of the unique normalized cusp form.

use modform_congruences::congruence::cusp_correction;
use modform_congruences::siegel::{igusa_x10, siegel_expansion};
use modform_congruences::{EisensteinNormalization, SiegelIndex};

fn main() -> modform_congruences::Result<()> {
    let g10 = siegel_expansion(EisensteinNormalization::G, 10, 3)?;
    let s = cusp_correction(&g10)?;
    println!("Φ(G10 − Eisenstein part) = 0: {}", s.phi().is_zero());

    let x10 = igusa_x10(3);
    let c = s.coeff(&SiegelIndex::new(1, 1, 1))?;
    println!("G10 − Eisenstein part = {c} · X10: {}", s == x10.scale(&c));
    print!("{}", s.serialize());
    Ok(())
}
