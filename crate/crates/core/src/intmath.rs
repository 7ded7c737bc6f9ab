//! Small integer helpers shared by the field and transform code.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Inverse of `a` modulo `modulus`, if it exists.
pub fn mod_inverse(a: u64, modulus: u64) -> Option<u64> {
    if modulus == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % modulus as i128, modulus as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(modulus as i128) as u64)
}

/// Distinct prime factors in ascending order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest member of every orbit of `j -> 2j mod modulus` on `1..modulus`,
/// sorted ascending. The zero orbit is excluded.
///
/// `modulus` must be odd so that doubling is a permutation.
pub fn cyclotomic_leaders(modulus: u64) -> Vec<u64> {
    debug_assert!(modulus % 2 == 1, "doubling is only a permutation for odd moduli");
    let mut seen = vec![false; modulus as usize];
    let mut leaders = Vec::new();
    for j in 1..modulus {
        if seen[j as usize] {
            continue;
        }
        leaders.push(j);
        let mut k = j;
        while !seen[k as usize] {
            seen[k as usize] = true;
            k = (2 * k) % modulus;
        }
    }
    leaders
}

/// The orbit of `j` under doubling modulo `modulus`, starting at `j`.
pub fn cyclotomic_coset(j: u64, modulus: u64) -> Vec<u64> {
    let start = j % modulus;
    let mut orbit = vec![start];
    let mut k = (2 * start) % modulus;
    while k != start {
        orbit.push(k);
        k = (2 * k) % modulus;
    }
    orbit
}
