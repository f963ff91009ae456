//! Bernoulli numbers, generalized Bernoulli numbers B_{n,χ_K} and the primes
//! they carry, for every imaginary quadratic field of class number one.

use modform_congruences::arith::{bernoulli, generalized_bernoulli};
use modform_congruences::congruence::{condition_b_primes, irregular_pairs};
use modform_congruences::hermitian::CLASS_NUMBER_ONE_DISCRIMINANTS;
use modform_congruences::ImagQuadField;

fn main() {
    println!("B_12 = {}", bernoulli(12));
    println!("irregular pairs below 200: {:?}", irregular_pairs(200));

    for d in CLASS_NUMBER_ONE_DISCRIMINANTS {
        let field = ImagQuadField::new(d).unwrap();
        let b9 = generalized_bernoulli(9, d).unwrap();
        let primes = condition_b_primes(&field, 10);
        println!("d = {d:>4}: B_(9,χ) = {b9}, condition (B) primes at k = 10: {:?}", primes[&10]);
    }
}
