//! Boolean functions on GF(2^n) as truth tables, with Walsh–Hadamard and
//! extended Walsh–Hadamard transforms.
//!
//! Tables are indexed by the canonical element enumeration. The field inner
//! product `Tr(ωx)` is a nondegenerate bilinear form, so the field-indexed
//! spectrum is the ordinary dot-product spectrum read through the linear map
//! `ω -> (Tr(ω·x^i))_i`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::field::FieldSpec;
use crate::intmath::{cyclotomic_leaders, gcd, mod_inverse};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoolFunError {
    #[error("exponent {k} is not coprime to {order}")]
    ExponentNotCoprime { k: u64, order: u64 },
    #[error("bentness needs an even number of variables, got {0}")]
    OddN(u32),
    #[error("truth table has {table} variables but the field has degree {field}")]
    DimensionMismatch { table: u32, field: u32 },
    #[error("function is not invariant under x -> α^(2^m+1) x or f(0) != 0")]
    HypothesisViolated,
    #[error("bad truth-table hex: {0}")]
    BadHex(String),
}

/// `2^n` output bits, bit `i` being `f(element i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: u32,
    words: Vec<u64>,
}

impl std::fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TruthTable(n={}, {})", self.n, self.to_hex())
    }
}

impl TruthTable {
    pub fn zero(n: u32) -> Self {
        let len = 1usize << n;
        TruthTable { n, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_fn(n: u32, mut f: impl FnMut(u32) -> bool) -> Self {
        let mut t = Self::zero(n);
        for i in 0..(1u32 << n) {
            if f(i) {
                t.set(i, true);
            }
        }
        t
    }

    /// Evaluates `f` at every element of the field.
    pub fn from_field(field: &FieldSpec, f: impl FnMut(u32) -> bool) -> Self {
        Self::from_fn(field.degree(), f)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        1usize << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, i: u32) -> bool {
        (self.words[(i >> 6) as usize] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: u32, v: bool) {
        let w = &mut self.words[(i >> 6) as usize];
        if v {
            *w |= 1 << (i & 63);
        } else {
            *w &= !(1 << (i & 63));
        }
    }

    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// `(-1)^f(x)` for every `x`.
    pub fn signs(&self) -> Vec<i32> {
        (0..self.len() as u32).map(|i| if self.get(i) { -1 } else { 1 }).collect()
    }

    /// Hex dump, little-endian: byte `j` holds outputs `8j..8j+8`, lowest bit first.
    pub fn to_hex(&self) -> String {
        let nbytes = self.len().div_ceil(8);
        let mut s = String::with_capacity(2 * nbytes);
        for j in 0..nbytes {
            let byte = (self.words[j / 8] >> (8 * (j % 8))) & 0xff;
            write!(s, "{byte:02x}").unwrap();
        }
        s
    }

    pub fn from_hex(n: u32, hex: &str) -> Result<Self, BoolFunError> {
        let bad = || BoolFunError::BadHex(hex.to_string());
        let digits = hex.trim();
        let digits = digits.strip_prefix("0x").unwrap_or(digits);
        let mut t = Self::zero(n);
        let nbytes = t.len().div_ceil(8);
        if digits.len() != 2 * nbytes || !digits.is_ascii() {
            return Err(bad());
        }
        for j in 0..nbytes {
            let byte = u8::from_str_radix(&digits[2 * j..2 * j + 2], 16).map_err(|_| bad())?;
            for bit in 0..8 {
                if (byte >> bit) & 1 == 1 {
                    let i = 8 * j + bit;
                    if i >= t.len() {
                        return Err(bad());
                    }
                    t.set(i as u32, true);
                }
            }
        }
        Ok(t)
    }
}

/// Walsh spectrum indexed by `ω` in the canonical enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    pub values: Vec<i32>,
}

impl WalshSpectrum {
    pub fn sum_of_squares(&self) -> i64 {
        self.values.iter().map(|&v| (v as i64) * (v as i64)).sum()
    }

    /// `omega,value` rows under a header line.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("omega,value\n");
        for (w, v) in self.values.iter().enumerate() {
            writeln!(s, "{w},{v}").unwrap();
        }
        s
    }
}

/// In-place fast Walsh–Hadamard butterfly over the dot product.
pub fn fwht(values: &mut [i32]) {
    let len = values.len();
    debug_assert!(len.is_power_of_two());
    let mut h = 1;
    while h < len {
        for block in values.chunks_exact_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

fn check_dims(field: &FieldSpec, f: &TruthTable) -> Result<(), BoolFunError> {
    if field.degree() != f.n() {
        return Err(BoolFunError::DimensionMismatch { table: f.n(), field: field.degree() });
    }
    Ok(())
}

/// The linear map `ω -> (Tr(ω·x^i))_i` as a lookup over all `ω`.
fn trace_dual(field: &FieldSpec) -> Vec<u32> {
    let cols: Vec<u32> = (0..field.degree())
        .map(|j| {
            let w = 1u32 << j;
            (0..field.degree()).fold(0, |acc, i| acc | ((field.abs_trace(field.mul(w, 1 << i)) as u32) << i))
        })
        .collect();
    let mut out = vec![0u32; field.size() as usize];
    for w in 1..field.size() {
        let low = w.trailing_zeros();
        out[w as usize] = out[(w & (w - 1)) as usize] ^ cols[low as usize];
    }
    out
}

/// `Σ_x (-1)^(f(x) + Tr(ωx))`, summed directly.
pub fn walsh(field: &FieldSpec, f: &TruthTable, omega: u32) -> Result<i32, BoolFunError> {
    check_dims(field, f)?;
    Ok(field.elements().map(|x| if f.get(x) as u8 ^ field.abs_trace(field.mul(omega, x)) == 0 { 1 } else { -1 }).sum())
}

/// Full spectrum `ω -> Ŵ(ω)` via the butterfly, O(n·2^n).
pub fn walsh_spectrum(field: &FieldSpec, f: &TruthTable) -> Result<WalshSpectrum, BoolFunError> {
    check_dims(field, f)?;
    let mut dot = f.signs();
    fwht(&mut dot);
    let dual = trace_dual(field);
    Ok(WalshSpectrum { values: dual.iter().map(|&v| dot[v as usize]).collect() })
}

/// `Σ_x (-1)^(f(x) + Tr(ω x^k))` for `gcd(k, 2^n - 1) = 1`.
pub fn extended_walsh(field: &FieldSpec, f: &TruthTable, omega: u32, k: u64) -> Result<i32, BoolFunError> {
    check_dims(field, f)?;
    let order = field.order() as u64;
    if gcd(k % order, order) != 1 {
        return Err(BoolFunError::ExponentNotCoprime { k, order });
    }
    Ok(field
        .elements()
        .map(|x| {
            let t = field.abs_trace(field.mul(omega, field.pow(x, k)));
            if f.get(x) as u8 ^ t == 0 {
                1
            } else {
                -1
            }
        })
        .sum())
}

/// Bent: every Walsh coefficient is `±2^(n/2)`. The check is index-free, so
/// no field is needed.
pub fn is_bent(f: &TruthTable) -> Result<bool, BoolFunError> {
    if f.n() % 2 != 0 {
        return Err(BoolFunError::OddN(f.n()));
    }
    let target = 1i32 << (f.n() / 2);
    let mut spec = f.signs();
    fwht(&mut spec);
    Ok(spec.iter().all(|v| v.abs() == target))
}

/// First `(ω, k)` at which the extended transform leaves `±2^(n/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HyperBentFailure {
    pub omega: u32,
    pub k: u64,
    pub value: i32,
}

/// Exponents checked by the hyper-bent definition: one leader per cyclotomic
/// coset of the units mod `2^n - 1`. `Ŵ(ω, 2k) = Ŵ(ω^(2^(n-1)), k)`, so a coset
/// shares one value set.
pub fn coprime_exponent_leaders(field: &FieldSpec) -> Vec<u64> {
    let order = field.order() as u64;
    cyclotomic_leaders(order).into_iter().filter(|&k| gcd(k, order) == 1).collect()
}

/// Checks the hyper-bent definition and returns the first failing `(ω, k)`.
pub fn hyper_bent_failure(field: &FieldSpec, f: &TruthTable) -> Result<Option<HyperBentFailure>, BoolFunError> {
    check_dims(field, f)?;
    if f.n() % 2 != 0 {
        return Err(BoolFunError::OddN(f.n()));
    }
    let order = field.order() as u64;
    let target = 1i32 << (f.n() / 2);
    let powers = field.powers_of_generator();
    let dual = trace_dual(field);
    let mut buf = vec![0i32; f.len()];
    for k in coprime_exponent_leaders(field) {
        // y = x^k is a permutation fixing 0, so Ŵ(ω, k) is the plain spectrum of
        // h(y) = f(y^(1/k)).
        let kinv = mod_inverse(k, order).expect("leader is coprime");
        buf[0] = if f.get(0) { -1 } else { 1 };
        for j in 0..order {
            let y = powers[j as usize];
            let x = powers[(j * kinv % order) as usize];
            buf[y as usize] = if f.get(x) { -1 } else { 1 };
        }
        fwht(&mut buf);
        if let Some(v) = buf.iter().position(|v| v.abs() != target) {
            let omega = dual.iter().position(|&d| d as usize == v).expect("dual map is bijective");
            return Ok(Some(HyperBentFailure { omega: omega as u32, k, value: buf[v] }));
        }
    }
    Ok(None)
}

/// Hyper-bent by definition: `Ŵ(ω, k) = ±2^(n/2)` for all `ω` and all `k`
/// coprime to `2^n - 1`.
pub fn is_hyper_bent_def(field: &FieldSpec, f: &TruthTable) -> Result<bool, BoolFunError> {
    Ok(hyper_bent_failure(field, f)?.is_none())
}

/// Weight test for functions with `f(α^(2^m+1) x) = f(x)` and `f(0) = 0`:
/// hyper-bent iff `(f(1), f(α), ..., f(α^(2^m)))` has weight `2^(m-1)`.
pub fn is_hyper_bent_restricted(field: &FieldSpec, f: &TruthTable, alpha: u32) -> Result<bool, BoolFunError> {
    check_dims(field, f)?;
    if f.n() % 2 != 0 {
        return Err(BoolFunError::OddN(f.n()));
    }
    let m = f.n() / 2;
    let shift = field.pow(alpha, (1u64 << m) + 1);
    let invariant = field.elements().all(|x| f.get(field.mul(shift, x)) == f.get(x));
    if !invariant || f.get(0) {
        return Err(BoolFunError::HypothesisViolated);
    }
    let mut weight = 0u64;
    let mut x = 1u32;
    for _ in 0..=(1u32 << m) {
        weight += f.get(x) as u64;
        x = field.mul(x, alpha);
    }
    Ok(weight == 1u64 << (m - 1))
}

/// ANF coefficients by the binary Möbius transform over the n-cube.
pub fn anf(f: &TruthTable) -> Vec<u8> {
    let mut a: Vec<u8> = (0..f.len() as u32).map(|i| f.get(i) as u8).collect();
    for i in 0..f.n() {
        let bit = 1usize << i;
        for idx in 0..a.len() {
            if idx & bit != 0 {
                a[idx] ^= a[idx ^ bit];
            }
        }
    }
    a
}

/// Degree of the algebraic normal form; `-1` for the zero function.
pub fn algebraic_degree(f: &TruthTable) -> i32 {
    anf(f).iter().enumerate().filter(|(_, &c)| c == 1).map(|(i, _)| i.count_ones() as i32).max().unwrap_or(-1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf64() -> FieldSpec {
        FieldSpec::new(6, None).unwrap()
    }

    fn naive_spectrum(field: &FieldSpec, f: &TruthTable) -> Vec<i32> {
        field.elements().map(|w| walsh(field, f, w).unwrap()).collect()
    }

    fn monomial(field: &FieldSpec, a: u32, e: u64) -> TruthTable {
        TruthTable::from_field(field, |x| field.abs_trace(field.mul(a, if x == 0 { 0 } else { field.pow(x, e) })) == 1)
    }

    #[test]
    fn constant_tables() {
        let f = gf64();
        let z = TruthTable::zero(6);
        assert!(z.is_zero());
        assert_eq!(walsh(&f, &z, 0), Ok(64));
        for w in 1..64 {
            assert_eq!(walsh(&f, &z, w), Ok(0));
        }
        let tr = TruthTable::from_field(&f, |x| f.abs_trace(x) == 1);
        assert_eq!(tr.weight(), 32);
        assert_eq!(algebraic_degree(&z), -1);
        assert_eq!(algebraic_degree(&tr), 1);
        assert_eq!(is_bent(&z), Ok(false));
        assert_eq!(is_hyper_bent_def(&f, &z), Ok(false));
        assert_eq!(is_hyper_bent_restricted(&f, &z, f.generator()), Ok(false));
    }

    #[test]
    fn table_matches_scalar_evaluation() {
        let f = gf64();
        for a in f.elements() {
            let t = monomial(&f, a, 7);
            for x in f.elements() {
                let direct = f.trace(f.mul(a, f.pow(x, 7)), 1).unwrap() == 1;
                assert_eq!(t.get(x), direct && x != 0);
            }
        }
    }

    #[test]
    fn butterfly_matches_double_loop() {
        let f = gf64();
        let mut seed = 0x9e3779b97f4a7c15u64;
        for _ in 0..20 {
            let t = TruthTable::from_fn(6, |_| {
                seed ^= seed << 13;
                seed ^= seed >> 7;
                seed ^= seed << 17;
                seed & 1 == 1
            });
            let fast = walsh_spectrum(&f, &t).unwrap();
            assert_eq!(fast.values, naive_spectrum(&f, &t));
            assert_eq!(fast.sum_of_squares(), 1 << 12);
        }
    }

    #[test]
    fn extended_transform_identities() {
        let f = gf64();
        let t = monomial(&f, 0x2d, 7);
        assert_eq!(extended_walsh(&f, &t, 5, 1), walsh(&f, &t, 5));
        assert!(matches!(extended_walsh(&f, &t, 5, 3), Err(BoolFunError::ExponentNotCoprime { .. })));
        let z = TruthTable::zero(6);
        for k in [1u64, 5, 11, 31] {
            for w in 1..64 {
                assert_eq!(extended_walsh(&f, &z, w, k), Ok(0));
            }
        }
        // Ŵ(ω, 2k) = Ŵ(ω^(2^(n-1)), k)
        for k in coprime_exponent_leaders(&f) {
            for w in f.elements() {
                let doubled = extended_walsh(&f, &t, w, 2 * k % 63).unwrap();
                let moved = extended_walsh(&f, &t, f.sqrt(w), k).unwrap();
                assert_eq!(doubled, moved);
            }
        }
    }

    #[test]
    fn classical_bent_import() {
        // x1 x2 + x3 x4 over 4 variables, bit i of the index is variable i+1.
        let t = TruthTable::from_fn(4, |i| ((i & 1) & (i >> 1 & 1)) ^ ((i >> 2 & 1) & (i >> 3 & 1)) == 1);
        let back = TruthTable::from_hex(4, &t.to_hex()).unwrap();
        assert_eq!(back, t);
        assert_eq!(is_bent(&back), Ok(true));
        assert_eq!(algebraic_degree(&back), 2);
        assert_eq!(is_bent(&TruthTable::zero(3)), Err(BoolFunError::OddN(3)));
    }

    #[test]
    fn hex_layout() {
        let t = TruthTable::from_fn(4, |i| i == 0 || i == 9);
        assert_eq!(t.to_hex(), "0102");
        assert!(TruthTable::from_hex(4, "01").is_err());
        assert!(TruthTable::from_hex(2, "f0").is_err());
        assert_eq!(TruthTable::from_hex(2, "09").unwrap().weight(), 2);
    }

    /// Exhaustive scan for a monomial Dillon witness and a bent, non-hyper-bent
    /// quadratic at n = 6.
    #[test]
    fn hyper_bent_witnesses() {
        let f = gf64();
        let witness = (1..64)
            .map(|a| monomial(&f, a, 7))
            .find(|t| is_hyper_bent_def(&f, t).unwrap())
            .expect("Dillon monomials with Kloosterman zeros exist at m = 3");
        let spec = walsh_spectrum(&f, &witness).unwrap();
        assert!(spec.values.iter().all(|v| v.abs() == 8));
        assert_eq!(is_hyper_bent_restricted(&f, &witness, f.generator()), Ok(true));
        assert_eq!(algebraic_degree(&witness), 3);

        // Tr(a x^(2^i + 1)) quadratics: bent ones are never hyper-bent.
        let mut found = None;
        'outer: for e in [3u64, 5, 9] {
            for a in 1..64 {
                let t = monomial(&f, a, e);
                if is_bent(&t).unwrap() {
                    let failure = hyper_bent_failure(&f, &t).unwrap();
                    found = Some((t, failure));
                    break 'outer;
                }
            }
        }
        let (t, failure) = found.expect("bent quadratic monomial exists at n = 6");
        let failure = failure.expect("a quadratic has degree 2 < 3 so it cannot be hyper-bent");
        assert_ne!(extended_walsh(&f, &t, failure.omega, failure.k).unwrap().abs(), 8);
        assert_eq!(extended_walsh(&f, &t, failure.omega, failure.k).unwrap(), failure.value);
    }

    #[test]
    fn restricted_weight_needs_invariance() {
        let f = gf64();
        let t = TruthTable::from_field(&f, |x| f.abs_trace(x) == 1);
        assert_eq!(is_hyper_bent_restricted(&f, &t, f.generator()), Err(BoolFunError::HypothesisViolated));
    }

    #[test]
    fn restricted_weight_agrees_with_definition() {
        let f = gf64();
        for a in f.elements() {
            let t = monomial(&f, a, 7);
            assert_eq!(
                is_hyper_bent_restricted(&f, &t, f.generator()).unwrap(),
                is_hyper_bent_def(&f, &t).unwrap(),
                "a = {a:#x}"
            );
        }
    }

    #[test]
    fn dimension_checked() {
        let f = gf64();
        let t = TruthTable::zero(4);
        assert!(matches!(walsh(&f, &t, 0), Err(BoolFunError::DimensionMismatch { .. })));
    }
}
