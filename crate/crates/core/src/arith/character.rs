//! Kronecker symbols and the real characters of imaginary quadratic fields.
//!
//! The symbol `(D/n)` is extended in the standard way:
//!
//! | argument        | value                                         |
//! |-----------------|-----------------------------------------------|
//! | `n = 0`         | `1` if `D = ±1`, else `0`                     |
//! | `n = -1`        | `-1` if `D < 0`, else `1`                     |
//! | `n = 2`, D even | `0`                                           |
//! | `n = 2`, D odd  | `1` if `D ≡ ±1 (mod 8)`, `-1` if `D ≡ ±3 (mod 8)` |
//! | odd `n > 0`     | Jacobi symbol                                 |
//!
//! and is completely multiplicative in `n`.

use crate::arith::primes::{factorize, is_squarefree};
use crate::error::{Error, Result};

/// Jacobi symbol (a/n) for odd positive n.
fn jacobi(a: i64, n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut result = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Kronecker symbol (d/n) for arbitrary integers.
pub fn kronecker_symbol(d: i64, n: i64) -> i8 {
    if n == 0 {
        return if d == 1 || d == -1 { 1 } else { 0 };
    }
    let mut result = 1i8;
    let mut m = n.unsigned_abs();
    if n < 0 && d < 0 {
        result = -result;
    }
    let twos = m.trailing_zeros();
    if twos > 0 {
        if d % 2 == 0 {
            return 0;
        }
        m >>= twos;
        if twos % 2 == 1 && matches!(d.rem_euclid(8), 3 | 5) {
            result = -result;
        }
    }
    result * jacobi(d, m)
}

pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

/// Kronecker symbol (D/n), rejecting non-fundamental D.
pub fn kronecker_chi(d: i64, n: i64) -> Result<i8> {
    if !is_fundamental_discriminant(d) {
        return Err(Error::NonFundamentalDiscriminant(d));
    }
    Ok(kronecker_symbol(d, n))
}

/// Writes a negative discriminant `n ≡ 0, 1 (mod 4)` as `D f^2` with `D` fundamental.
pub fn fundamental_decomposition(n: i64) -> Result<(i64, u64)> {
    if n >= 0 || !matches!(n.rem_euclid(4), 0 | 1) {
        return Err(Error::InvalidDiscriminantResidue(n));
    }
    let mut core = 1u64;
    let mut square_root = 1u64;
    for (p, e) in factorize(n.unsigned_abs()) {
        square_root *= p.pow(e / 2);
        if e % 2 == 1 {
            core *= p;
        }
    }
    let core = -(core as i64);
    if core.rem_euclid(4) == 1 {
        Ok((core, square_root))
    } else {
        // n ≡ 0 mod 4 forces an even square part here.
        debug_assert!(square_root % 2 == 0);
        Ok((4 * core, square_root / 2))
    }
}

/// The character χ_D of the imaginary quadratic field of discriminant D,
/// tabulated over one period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KroneckerCharacter {
    disc: i64,
    table: Vec<i8>,
}

impl KroneckerCharacter {
    pub fn new(disc: i64) -> Result<Self> {
        if disc >= 0 || !is_fundamental_discriminant(disc) {
            return Err(Error::NonFundamentalDiscriminant(disc));
        }
        let modulus = disc.unsigned_abs();
        let table = (0..modulus as i64).map(|n| kronecker_symbol(disc, n)).collect();
        Ok(KroneckerCharacter { disc, table })
    }

    pub fn discriminant(&self) -> i64 {
        self.disc
    }

    pub fn modulus(&self) -> u64 {
        self.disc.unsigned_abs()
    }

    pub fn value(&self, n: i64) -> i8 {
        self.table[n.rem_euclid(self.table.len() as i64) as usize]
    }

    pub fn value_u(&self, n: u64) -> i8 {
        self.table[(n % self.table.len() as u64) as usize]
    }
}
