//! Binary fields GF(2^k) in a polynomial basis.
//!
//! Elements are plain `u32` coefficient vectors: bit `i` is the coefficient of
//! `x^i`, so the enumeration index of an element *is* its bit pattern. All
//! arithmetic goes through a [`FieldSpec`], which owns the modulus, the
//! primitive element and (for degree ≤ 16) discrete-log tables.
//!
//! [`FieldElement`] wraps a value together with its field for code that wants
//! operator syntax and field-mismatch checking.

mod element;
mod extension;
pub mod poly;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::intmath::prime_factors;

pub use element::FieldElement;
pub use extension::QuadraticExtension;

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 24;
/// Fields up to this degree get log/antilog tables.
pub const TABLE_DEGREE: u32 = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("degree {0} outside supported range [{MIN_DEGREE}, {MAX_DEGREE}]")]
    DegreeOutOfRange(u32),
    #[error("modulus {modulus:#x} does not have degree {degree}")]
    ModulusDegree { modulus: u64, degree: u32 },
    #[error("modulus {0:#x} is not irreducible")]
    NotIrreducible(u64),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("{sub} does not divide the field degree {degree}")]
    NotADivisor { sub: u32, degree: u32 },
    #[error("field degree {0} is odd")]
    OddDegree(u32),
    #[error("element {0:#x} does not lie in the subfield")]
    NotInSubfield(u32),
    #[error("element {value:#x} out of range for a degree-{degree} field")]
    ElementOutOfRange { value: u64, degree: u32 },
    #[error("invalid hex value {0:?}")]
    BadHex(String),
}

#[derive(Clone)]
struct LogTables {
    /// `exp[i] = g^i` for `i < 2 * order`, so sums of two logs need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A binary field GF(2^k). Immutable after construction.
#[derive(Clone)]
pub struct FieldSpec {
    degree: u32,
    modulus: u32,
    generator: u32,
    order: u32,
    /// Bit `i` is `Tr(x^i)`, so the absolute trace is a parity of `x & trace_mask`.
    trace_mask: u32,
    tables: Option<LogTables>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("degree", &self.degree)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .field("generator", &format_args!("{:#x}", self.generator))
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

/// Serializable summary embedded in every report header.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub degree: u32,
    pub modulus: String,
    pub generator: String,
    pub order: u32,
}

impl FieldSpec {
    /// Builds GF(2^degree). Without an explicit modulus the numerically
    /// smallest irreducible polynomial of that degree is used.
    pub fn new(degree: u32, modulus: Option<u64>) -> Result<Self, FieldError> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&degree) {
            return Err(FieldError::DegreeOutOfRange(degree));
        }
        let modulus = match modulus {
            Some(p) => {
                if poly::degree(p) != Some(degree) {
                    return Err(FieldError::ModulusDegree { modulus: p, degree });
                }
                if !poly::is_irreducible(p) {
                    return Err(FieldError::NotIrreducible(p));
                }
                p
            }
            None => poly::smallest_irreducible(degree),
        };
        let order = (1u32 << degree) - 1;
        let mut field = FieldSpec { degree, modulus: modulus as u32, generator: 0, order, trace_mask: 0, tables: None };
        field.generator = field.find_generator();
        field.trace_mask = (0..degree).filter(|&i| field.trace_slow(1 << i) == 1).fold(0, |m, i| m | (1 << i));
        if degree <= TABLE_DEGREE {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    fn find_generator(&self) -> u32 {
        let n = self.order as u64;
        let cofactors: Vec<u64> = prime_factors(n).into_iter().map(|q| n / q).collect();
        (2..=self.order)
            .find(|&g| cofactors.iter().all(|&c| self.pow_slow(g, c) != 1))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    fn build_tables(&self) -> LogTables {
        let n = self.order as usize;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; n + 1];
        let mut x = 1u32;
        for i in 0..n {
            exp[i] = x;
            exp[i + n] = x;
            log[x as usize] = i as u32;
            x = self.mul_slow(x, self.generator);
        }
        LogTables { exp, log }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// The primitive element: smallest enumeration index of full order.
    pub fn generator(&self) -> u32 {
        self.generator
    }

    /// Multiplicative group order `2^k - 1`.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Number of elements `2^k`.
    pub fn size(&self) -> u32 {
        self.order + 1
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.size()
    }

    pub fn contains(&self, x: u64) -> bool {
        x < self.size() as u64
    }

    pub fn check(&self, x: u64) -> Result<u32, FieldError> {
        if self.contains(x) {
            Ok(x as u32)
        } else {
            Err(FieldError::ElementOutOfRange { value: x, degree: self.degree })
        }
    }

    pub fn element(&self, bits: u32) -> Result<FieldElement<'_>, FieldError> {
        FieldElement::new(self, bits)
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            degree: self.degree,
            modulus: format!("{:#x}", self.modulus),
            generator: format!("{:#x}", self.generator),
            order: self.order,
        }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        poly::mulmod(a as u64, b as u64, self.modulus as u64) as u32
    }

    fn pow_slow(&self, mut base: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            Some(t) => {
                if a == 0 || b == 0 {
                    0
                } else {
                    t.exp[(t.log[a as usize] + t.log[b as usize]) as usize]
                }
            }
            None => self.mul_slow(a, b),
        }
    }

    #[inline]
    pub fn square(&self, a: u32) -> u32 {
        self.mul(a, a)
    }

    /// Multiplicative inverse with the convention `1/0 = 0`.
    pub fn inv(&self, a: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        match &self.tables {
            Some(t) => {
                let l = t.log[a as usize];
                t.exp[((self.order - l) % self.order) as usize]
            }
            None => self.pow(a, self.order as u64 - 1),
        }
    }

    /// `a / b`, zero when `b = 0`.
    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    /// `a^e`. For nonzero `a` the exponent is reduced mod `2^k - 1`;
    /// `0^0 = 1` and `0^e = 0` otherwise.
    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return u32::from(e == 0);
        }
        let e = e % self.order as u64;
        match &self.tables {
            Some(t) => {
                let l = t.log[a as usize] as u64;
                t.exp[(l * e % self.order as u64) as usize]
            }
            None => self.pow_slow(a, e),
        }
    }

    /// `a^e` for a signed exponent; negative powers of zero are zero.
    pub fn pow_signed(&self, a: u32, e: i64) -> u32 {
        if a == 0 {
            return u32::from(e == 0);
        }
        self.pow(a, e.rem_euclid(self.order as i64) as u64)
    }

    /// `x^(2^times)`.
    pub fn frobenius(&self, mut x: u32, times: u32) -> u32 {
        for _ in 0..times % self.degree {
            x = self.square(x);
        }
        x
    }

    /// Square root, `x^(2^(k-1))`.
    pub fn sqrt(&self, x: u32) -> u32 {
        self.frobenius(x, self.degree - 1)
    }

    /// Discrete log base the generator; `None` for zero. Table-backed fields only
    /// answer in O(1); larger fields fall back to a linear walk.
    pub fn log(&self, x: u32) -> Option<u32> {
        if x == 0 {
            return None;
        }
        match &self.tables {
            Some(t) => Some(t.log[x as usize]),
            None => {
                let mut y = 1u32;
                for i in 0..self.order {
                    if y == x {
                        return Some(i);
                    }
                    y = self.mul(y, self.generator);
                }
                unreachable!("every nonzero element is a power of the generator")
            }
        }
    }

    /// `[g^0, g^1, ..., g^(order-1)]`.
    pub fn powers_of_generator(&self) -> Vec<u32> {
        match &self.tables {
            Some(t) => t.exp[..self.order as usize].to_vec(),
            None => {
                let mut out = Vec::with_capacity(self.order as usize);
                let mut x = 1u32;
                for _ in 0..self.order {
                    out.push(x);
                    x = self.mul(x, self.generator);
                }
                out
            }
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, x: u32) -> Option<u64> {
        if x == 0 {
            return None;
        }
        let mut ord = self.order as u64;
        for q in prime_factors(ord) {
            while ord % q == 0 && self.pow(x, ord / q) == 1 {
                ord /= q;
            }
        }
        Some(ord)
    }

    fn trace_slow(&self, x: u32) -> u32 {
        let mut acc = 0;
        let mut y = x;
        for _ in 0..self.degree {
            acc ^= y;
            y = self.mul_slow(y, y);
        }
        acc
    }

    /// Absolute trace `Tr^k_1(x)` as a bit.
    #[inline]
    pub fn abs_trace(&self, x: u32) -> u8 {
        ((x & self.trace_mask).count_ones() & 1) as u8
    }

    /// Relative trace `Tr^k_d(x) = x + x^(2^d) + ... + x^(2^(k-d))`, valued in
    /// the degree-`d` subfield.
    pub fn trace(&self, x: u32, sub_degree: u32) -> Result<u32, FieldError> {
        if sub_degree == 0 || self.degree % sub_degree != 0 {
            return Err(FieldError::NotADivisor { sub: sub_degree, degree: self.degree });
        }
        let mut acc = 0;
        let mut y = x;
        for _ in 0..self.degree / sub_degree {
            acc ^= y;
            y = self.frobenius(y, sub_degree);
        }
        Ok(acc)
    }

    /// Whether `x` lies in the degree-`sub_degree` subfield (`x^(2^d) = x`).
    pub fn in_subfield(&self, x: u32, sub_degree: u32) -> bool {
        self.frobenius(x, sub_degree) == x
    }

    /// `x^(2^m)` in a field of degree `2m`.
    pub fn frobenius_conjugate(&self, x: u32) -> Result<u32, FieldError> {
        if self.degree % 2 != 0 {
            return Err(FieldError::OddDegree(self.degree));
        }
        Ok(self.frobenius(x, self.degree / 2))
    }

    /// `U_{2^m+1}` listed as `ξ^0, ξ^1, ..., ξ^(2^m)` with `ξ = g^(2^m - 1)`.
    pub fn unit_subgroup(&self) -> Result<Vec<u32>, FieldError> {
        if self.degree % 2 != 0 {
            return Err(FieldError::OddDegree(self.degree));
        }
        let m = self.degree / 2;
        let xi = self.pow(self.generator, (1u64 << m) - 1);
        let mut out = Vec::with_capacity((1usize << m) + 1);
        let mut u = 1u32;
        for _ in 0..=(1u32 << m) {
            out.push(u);
            u = self.mul(u, xi);
        }
        Ok(out)
    }

    pub fn format(&self, x: u32) -> String {
        format!("{x:#x}")
    }

    /// Parses `0x..` (or bare) hex and checks the value belongs to this field.
    pub fn parse(&self, s: &str) -> Result<u32, FieldError> {
        self.check(parse_hex(s)?)
    }
}

/// Parses a hex string with optional `0x` prefix.
pub fn parse_hex(s: &str) -> Result<u64, FieldError> {
    let t = s.trim();
    let digits = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")).unwrap_or(t);
    u64::from_str_radix(digits, 16).map_err(|_| FieldError::BadHex(s.to_string()))
}
