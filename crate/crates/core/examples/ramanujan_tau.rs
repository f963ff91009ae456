//! τ(n) from Δ = (E₄³ − E₆²)/1728 and the congruence τ(n) ≡ σ₁₁(n) (mod 691).

use modform_congruences::arith::functions::sigma;
use modform_congruences::elliptic::tau_values;
use num_bigint::BigInt;

fn main() {
    let tau = tau_values(12);
    for n in 1..=12u64 {
        let s = sigma(11, n);
        let diff: BigInt = (&s - &tau[n as usize]) % BigInt::from(691);
        println!("n = {n:>2}  τ(n) = {:>12}  σ11(n) − τ(n) ≡ {diff} (mod 691)", tau[n as usize]);
    }
}
