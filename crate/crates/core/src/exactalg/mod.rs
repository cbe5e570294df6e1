//! Exact arithmetic over prime fields GF(p) and the rationals.
//!
//! Everything here is exact: residues stay reduced to `[0, p)` and rationals
//! are arbitrary precision in lowest terms. Zero tests are therefore
//! decisions, not approximations, which is what the representation layer
//! relies on. Floating-point linear algebra lives in the `sdp` module.

pub mod format;
mod matrix;
mod scalar;
mod vector;

pub use matrix::ExactMatrix;
pub use scalar::{Field, FieldScalar};
pub use vector::ExactVector;

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map(|s| s <= p).unwrap_or(false) {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + (p - b) as u128;
    (s % p as u128) as u64
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse by Fermat's little theorem. Panics on zero.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "zero has no inverse");
    pow_mod(a, p - 2, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes = [2u64, 3, 5, 7, 11, 13, 101, 65537];
        for p in primes {
            assert!(is_prime(p), "{p} is prime");
        }
        for q in [0u64, 1, 4, 9, 15, 100, 65539 * 3] {
            assert!(!is_prime(q), "{q} is not prime");
        }
    }

    #[test]
    fn modular_inverse() {
        for p in [2u64, 3, 5, 7, 13] {
            for a in 1..p {
                assert_eq!(mul_mod(a, inv_mod(a, p), p), 1);
            }
        }
    }
}
