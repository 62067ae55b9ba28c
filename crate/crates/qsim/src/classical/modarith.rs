//! Euclid's gcd and square-and-multiply modular exponentiation, with
//! arbitrary-precision cores so moduli up to a few thousand (and hence
//! squarings near N^2) never overflow.

use num_bigint::BigUint;
use num_integer::Integer;

pub fn gcd_big(a: &BigUint, b: &BigUint) -> BigUint {
    a.gcd(b)
}

/// `x^a mod n` by repeated squaring over the bits of `a`; requires `n >= 2`.
pub fn modexp_big(x: &BigUint, a: &BigUint, n: &BigUint) -> BigUint {
    assert!(*n >= BigUint::from(2u32), "modulus must be >= 2");
    x.modpow(a, n)
}

/// gcd on machine words; `gcd(a, 0) = a`.
pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// `x^a mod n` on machine words, routed through the arbitrary-precision core.
pub fn modexp_u64(x: u64, a: u64, n: u64) -> u64 {
    let result = modexp_big(&BigUint::from(x), &BigUint::from(a), &BigUint::from(n));
    u64::try_from(&result).expect("result < n fits in u64")
}
