//! Polynomials over GF(2) packed into machine words, bit `i` holding the
//! coefficient of `X^i`. Degrees stay below 32 so products fit in a `u64`.

use crate::intmath::prime_factors;

pub fn degree(p: u64) -> Option<u32> {
    (p != 0).then(|| 63 - p.leading_zeros())
}

/// Carry-less product.
pub fn clmul(a: u64, b: u64) -> u64 {
    debug_assert!(degree(a).unwrap_or(0) + degree(b).unwrap_or(0) < 64);
    let mut acc = 0u64;
    let mut b = b;
    let mut shifted = a;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= shifted;
        }
        b >>= 1;
        shifted <<= 1;
    }
    acc
}

pub fn rem(mut a: u64, p: u64) -> u64 {
    let dp = degree(p).expect("division by the zero polynomial");
    while let Some(da) = degree(a) {
        if da < dp {
            break;
        }
        a ^= p << (da - dp);
    }
    a
}

pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    rem(clmul(a, b), p)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// `X^(2^k) mod p`, by `k` squarings.
fn x_pow_two_pow(k: u32, p: u64) -> u64 {
    let mut t = rem(0b10, p);
    for _ in 0..k {
        t = mulmod(t, t, p);
    }
    t
}

/// Rabin's irreducibility test: `p` of degree `k` is irreducible iff
/// `X^(2^k) = X mod p` and `gcd(X^(2^(k/q)) - X, p) = 1` for every prime `q | k`.
pub fn is_irreducible(p: u64) -> bool {
    let Some(k) = degree(p) else { return false };
    if k == 0 {
        return false;
    }
    if x_pow_two_pow(k, p) != rem(0b10, p) {
        return false;
    }
    prime_factors(k as u64).into_iter().all(|q| {
        let t = x_pow_two_pow(k / q as u32, p) ^ rem(0b10, p);
        degree(gcd(p, t)) == Some(0)
    })
}

/// The numerically smallest irreducible polynomial of the given degree.
pub fn smallest_irreducible(k: u32) -> u64 {
    let lo = 1u64 << k;
    (lo..lo << 1).find(|&p| is_irreducible(p)).expect("irreducible polynomials exist in every degree")
}
