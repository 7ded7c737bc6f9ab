//! Dillon-exponent families
//! `f(x) = Σ_r Tr^n_1(a_r x^(r(2^m-1))) + Tr^2_1(b x^((2^n-1)/3))`
//! over GF(2^{2m}), plus the Dickson polynomials and coefficient split their
//! criteria are phrased in.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::boolfun::TruthTable;
use crate::field::{FieldError, FieldSpec, QuadraticExtension};
use crate::intmath::cyclotomic_leaders;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("r = {r} is not a nonzero coset leader modulo {modulus}")]
    NotCosetLeader { r: u64, modulus: u64 },
    #[error("b = {0:#x} is not in the embedded F_4")]
    BNotInF4(u32),
    #[error("u0 = {0:#x} is not in U_(2^m+1) \\ {{1}}")]
    BadU0(u32),
    #[error("u0^{r} = 1, the split basis collapses")]
    DegenerateU0 { r: u64 },
    #[error("spec is for m = {spec}, extension has m = {ext}")]
    WrongM { spec: u32, ext: u32 },
    #[error("spec field {spec} does not match extension modulus {ext}")]
    WrongField { spec: String, ext: String },
    #[error("bad spec JSON: {0}")]
    Json(String),
}

/// Smallest representative of every nonzero orbit of doubling mod `modulus`.
pub fn coset_leaders(modulus: u64) -> Vec<u64> {
    cyclotomic_leaders(modulus)
}

/// Binary Dickson polynomial `D_r(x)` by `D_{i+2} = x D_{i+1} + D_i`,
/// `D_0 = 0`, `D_1 = x`.
pub fn dickson(field: &FieldSpec, r: u64, x: u32) -> u32 {
    let (mut prev, mut cur) = (0u32, x);
    if r == 0 {
        return 0;
    }
    for _ in 1..r {
        let next = field.mul(x, cur) ^ prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `D_r` as a polynomial over GF(2), bit `i` the coefficient of `X^i`.
pub fn dickson_poly(r: u64) -> Vec<u64> {
    let words = (r as usize + 1).div_ceil(64);
    let mut prev = vec![0u64; words];
    let mut cur = vec![0u64; words];
    if r == 0 {
        return cur;
    }
    cur[0] = 0b10;
    for _ in 1..r {
        // next = X * cur + prev
        let mut next = prev.clone();
        let mut carry = 0u64;
        for (i, w) in cur.iter().enumerate() {
            next[i] ^= (w << 1) | carry;
            carry = w >> 63;
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// Horner evaluation of a packed GF(2) polynomial.
pub fn eval_gf2_poly(field: &FieldSpec, coeffs: &[u64], x: u32) -> u32 {
    let bits = coeffs.len() * 64;
    (0..bits).rev().fold(0u32, |acc, i| field.mul(acc, x) ^ ((coeffs[i / 64] >> (i % 64)) & 1) as u32)
}

/// One `Tr^n_1(a_r x^(r(2^m-1)))` term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Term {
    pub r: u64,
    pub a: u32,
}

/// A Dillon-exponent family member; all elements live in GF(2^{2m}).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    m: u32,
    terms: Vec<Term>,
    b: Option<u32>,
    u0: u32,
}

impl FamilySpec {
    pub fn new(ext: &QuadraticExtension, terms: Vec<Term>, b: Option<u32>, u0: u32) -> Result<Self, FamilyError> {
        let big = ext.big();
        let modulus = (1u64 << ext.m()) + 1;
        let leaders = coset_leaders(modulus);
        for t in &terms {
            big.check(t.a as u64)?;
            if !leaders.contains(&t.r) {
                return Err(FamilyError::NotCosetLeader { r: t.r, modulus });
            }
        }
        if let Some(b) = b {
            big.check(b as u64)?;
            if !ext.in_f4(b) {
                return Err(FamilyError::BNotInF4(b));
            }
        }
        big.check(u0 as u64)?;
        if u0 == 1 || !ext.is_unit(u0) {
            return Err(FamilyError::BadU0(u0));
        }
        Ok(FamilySpec { m: ext.m(), terms, b, u0 })
    }

    /// Single-term spec with the default `u0 = ξ`.
    pub fn monomial(ext: &QuadraticExtension, r: u64, a: u32, b: Option<u32>) -> Result<Self, FamilyError> {
        Self::new(ext, vec![Term { r, a }], b, ext.xi())
    }

    /// `Tr^n_1((a + c u0) x^(2^m-1) + b x^((2^n-1)/3))` with `a, b, c` in GF(2^m)
    /// and `u0` the primitive cube root of unity. `b` may also be given in F_4;
    /// either way only its F_4 image `Tr^n_2(b)` reaches the function.
    pub fn cube_root_binomial(ext: &QuadraticExtension, a: u32, b_big: u32, c: u32) -> Result<Self, FamilyError> {
        let big = ext.big();
        let u0 = ext.cube_root();
        let coef = ext.embed(a) ^ big.mul(ext.embed(c), u0);
        let b4 = ext.trace_to_f4(b_big);
        Self::new(ext, vec![Term { r: 1, a: coef }], (b4 != 0).then_some(b4), u0)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// The F_4 coefficient, `None` when absent or zero.
    pub fn b(&self) -> Option<u32> {
        self.b.filter(|&b| b != 0)
    }

    pub fn raw_b(&self) -> Option<u32> {
        self.b
    }

    pub fn u0(&self) -> u32 {
        self.u0
    }

    pub fn has_b_term(&self) -> bool {
        self.b().is_some()
    }

    /// The same terms without the F_4 term.
    pub fn b_free(&self) -> Self {
        FamilySpec { b: None, ..self.clone() }
    }

    pub fn with_u0(&self, ext: &QuadraticExtension, u0: u32) -> Result<Self, FamilyError> {
        Self::new(ext, self.terms.clone(), self.b, u0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.a == 0) && !self.has_b_term()
    }

    fn check_ext(&self, ext: &QuadraticExtension) {
        assert_eq!(self.m, ext.m(), "family spec used with a different extension");
    }

    pub fn to_json(&self, ext: &QuadraticExtension) -> SpecJson {
        SpecJson {
            m: self.m,
            field: format!("{:#x}", ext.big().modulus()),
            terms: self.terms.iter().map(|t| TermJson { r: t.r, a: format!("{:#x}", t.a) }).collect(),
            b: self.b.map(|b| format!("{b:#x}")),
            u0: Some(format!("{:#x}", self.u0)),
        }
    }

    /// First 16 hex digits of the SHA-256 of the canonical JSON form.
    pub fn hash(&self, ext: &QuadraticExtension) -> String {
        let json = serde_json::to_string(&self.to_json(ext)).expect("spec JSON serializes");
        let digest = Sha256::digest(json.as_bytes());
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_json(ext: &QuadraticExtension, json: &SpecJson) -> Result<Self, FamilyError> {
        if json.m != ext.m() {
            return Err(FamilyError::WrongM { spec: json.m, ext: ext.m() });
        }
        let big = ext.big();
        let modulus = crate::field::parse_hex(&json.field)?;
        if modulus != big.modulus() as u64 {
            return Err(FamilyError::WrongField { spec: json.field.clone(), ext: format!("{:#x}", big.modulus()) });
        }
        let terms = json
            .terms
            .iter()
            .map(|t| Ok(Term { r: t.r, a: big.parse(&t.a)? }))
            .collect::<Result<Vec<_>, FieldError>>()?;
        let b = json.b.as_deref().map(|s| big.parse(s)).transpose()?;
        let u0 = match json.u0.as_deref() {
            Some(s) => big.parse(s)?,
            None => ext.xi(),
        };
        Self::new(ext, terms, b, u0)
    }
}

/// On-disk family spec; elements are hex enumeration indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    pub m: u32,
    /// Modulus of GF(2^{2m}).
    pub field: String,
    pub terms: Vec<TermJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u0: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub r: u64,
    pub a: String,
}

impl SpecJson {
    pub fn parse(text: &str) -> Result<Self, FamilyError> {
        serde_json::from_str(text).map_err(|e| FamilyError::Json(e.to_string()))
    }
}

/// `a_r = a' + a'' u0^r` with `a', a''` in GF(2^m), stored as small-field values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoefficientSplit {
    pub a_prime: u32,
    pub a_dprime: u32,
}

/// `a' = (a u0^-r + a^(2^m) u0^r) / (u0^r + u0^-r)`,
/// `a'' = (a + a^(2^m)) / (u0^r + u0^-r)`.
pub fn split_coefficient(ext: &QuadraticExtension, a: u32, u0: u32, r: u64) -> Result<CoefficientSplit, FamilyError> {
    let big = ext.big();
    if u0 == 1 || !ext.is_unit(u0) {
        return Err(FamilyError::BadU0(u0));
    }
    let ur = big.pow(u0, r);
    if ur == 1 {
        return Err(FamilyError::DegenerateU0 { r });
    }
    let ur_inv = big.inv(ur);
    let denom_inv = big.inv(ur ^ ur_inv);
    let conj = ext.conjugate(a);
    let a_prime = big.mul(big.mul(a, ur_inv) ^ big.mul(conj, ur), denom_inv);
    let a_dprime = big.mul(a ^ conj, denom_inv);
    Ok(CoefficientSplit { a_prime: ext.restrict(a_prime)?, a_dprime: ext.restrict(a_dprime)? })
}

/// Precomputed exponents for evaluating a [`FamilySpec`].
#[derive(Debug, Clone)]
pub struct FamilyEvaluator<'e> {
    ext: &'e QuadraticExtension,
    /// `(r(2^m-1) mod (2^n-1), a_r)`
    terms: Vec<(u64, u32)>,
    b: Option<u32>,
    b_exp: u64,
}

impl<'e> FamilyEvaluator<'e> {
    pub fn new(ext: &'e QuadraticExtension, spec: &FamilySpec) -> Self {
        spec.check_ext(ext);
        let order = ext.big().order() as u64;
        let dillon = (1u64 << ext.m()) - 1;
        let terms = spec.terms.iter().filter(|t| t.a != 0).map(|t| (t.r * dillon % order, t.a)).collect();
        FamilyEvaluator { ext, terms, b: spec.b(), b_exp: order / 3 }
    }

    /// `f(x)`; every exponent is positive so `f(0) = 0`.
    pub fn eval(&self, x: u32) -> bool {
        if x == 0 {
            return false;
        }
        let big = self.ext.big();
        // Tr^n_1 is linear: trace the sum once.
        let acc = self.terms.iter().fold(0u32, |acc, &(e, a)| acc ^ big.mul(a, big.pow(x, e)));
        let mut bit = big.abs_trace(acc);
        if let Some(b) = self.b {
            bit ^= self.ext.tr2(big.mul(b, big.pow(x, self.b_exp)));
        }
        bit == 1
    }

    /// `(-1)^f(x)`.
    pub fn sign(&self, x: u32) -> i64 {
        if self.eval(x) {
            -1
        } else {
            1
        }
    }

    pub fn truth_table(&self) -> TruthTable {
        let big = self.ext.big();
        let order = big.order() as u64;
        let powers = big.powers_of_generator();
        let mut t = TruthTable::zero(big.degree());
        for j in 0..order {
            let acc = self.terms.iter().fold(0u32, |acc, &(e, a)| acc ^ big.mul(a, powers[(j * e % order) as usize]));
            let mut bit = big.abs_trace(acc);
            if let Some(b) = self.b {
                bit ^= self.ext.tr2(big.mul(b, powers[(j * self.b_exp % order) as usize]));
            }
            t.set(powers[j as usize], bit == 1);
        }
        t
    }
}

/// `f(x)` for a single point.
pub fn eval_family(ext: &QuadraticExtension, spec: &FamilySpec, x: u32) -> bool {
    FamilyEvaluator::new(ext, spec).eval(x)
}

/// `K_m(a) = Σ_{x in GF(2^m)} (-1)^Tr(1/x + a x)` with `1/0 = 0`.
pub fn kloosterman(field: &FieldSpec, a: u32) -> i64 {
    field.elements().map(|x| if field.abs_trace(field.inv(x) ^ field.mul(a, x)) == 0 { 1 } else { -1 }).sum()
}
