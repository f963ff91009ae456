//! Prime scanners for a single field: condition (A), condition (B) and a
//! nontriviality witness q with χ_K(q) = −1.

use modform_congruences::congruence::{condition_a_check, condition_b_primes, nontriviality_witness};
use modform_congruences::ImagQuadField;

fn main() -> modform_congruences::Result<()> {
    let d = std::env::args().nth(1).map_or(Ok(-11), |s| s.parse()).expect("discriminant");
    let field = ImagQuadField::new(d)?;
    for (k, primes) in condition_b_primes(&field, 12) {
        for p in primes {
            // certified cofactors can exceed u64; the witness search is u64-only
            let Ok(p) = u64::try_from(p) else { continue };
            let a = condition_a_check(&field, p);
            let witness = a.then(|| nontriviality_witness(&field, k, p, 1_000_000).ok()).flatten();
            println!(
                "k = {k:>2}  p = {p:>8}  (A): {a:<5}  witness: {}",
                witness.map_or("-".to_string(), |w| format!("q = {}", w.q))
            );
        }
    }
    Ok(())
}
