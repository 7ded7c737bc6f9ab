use crate::intmath::gcd;

use super::{FieldDescriptor, FieldError, FieldSpec};

/// GF(2^m) realized inside GF(2^{2m}).
///
/// Both fields are built directly over GF(2). The small field embeds as the
/// fixed field of `x -> x^(2^m)`: its generator `β` is sent to the element
/// `α^((2^{2m}-1)/(2^m-1) · t)` for the smallest `t` coprime to `2^m - 1`
/// that is a root of `β`'s minimal polynomial, and `β^j -> γ^j` extends it.
#[derive(Debug, Clone)]
pub struct QuadraticExtension {
    m: u32,
    big: FieldSpec,
    small: FieldSpec,
    embed: Vec<u32>,
    /// Inverse of `embed` on the subfield, `u32::MAX` elsewhere.
    restrict: Vec<u32>,
    xi: u32,
    units: Vec<u32>,
    /// `α^((2^n-1)/3)`, a primitive cube root of unity.
    cube_root: u32,
}

const NOT_IN_SUBFIELD: u32 = u32::MAX;

impl QuadraticExtension {
    pub fn new(m: u32, big_modulus: Option<u64>, small_modulus: Option<u64>) -> Result<Self, FieldError> {
        if m < 2 || 2 * m > super::MAX_DEGREE {
            return Err(FieldError::DegreeOutOfRange(2 * m));
        }
        let big = FieldSpec::new(2 * m, big_modulus)?;
        let small = FieldSpec::new(m, small_modulus)?;
        let embed = embedding(&big, &small);
        let mut restrict = vec![NOT_IN_SUBFIELD; big.size() as usize];
        for (s, &b) in embed.iter().enumerate() {
            restrict[b as usize] = s as u32;
        }
        let units = big.unit_subgroup()?;
        let xi = units[1];
        let cube_root = big.pow(big.generator(), big.order() as u64 / 3);
        Ok(QuadraticExtension { m, big, small, embed, restrict, xi, units, cube_root })
    }

    /// Extension over the default moduli.
    pub fn with_defaults(m: u32) -> Result<Self, FieldError> {
        Self::new(m, None, None)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// GF(2^{2m}).
    pub fn big(&self) -> &FieldSpec {
        &self.big
    }

    /// GF(2^m).
    pub fn small(&self) -> &FieldSpec {
        &self.small
    }

    pub fn descriptors(&self) -> [FieldDescriptor; 2] {
        [self.big.descriptor(), self.small.descriptor()]
    }

    pub fn embed(&self, x: u32) -> u32 {
        self.embed[x as usize]
    }

    /// Pulls a Frobenius-fixed element down to GF(2^m).
    pub fn restrict(&self, x: u32) -> Result<u32, FieldError> {
        match self.restrict.get(x as usize) {
            Some(&s) if s != NOT_IN_SUBFIELD => Ok(s),
            _ => Err(FieldError::NotInSubfield(x)),
        }
    }

    pub fn in_subfield(&self, x: u32) -> bool {
        self.restrict(x).is_ok()
    }

    /// `x^(2^m)`.
    pub fn conjugate(&self, x: u32) -> u32 {
        self.big.frobenius(x, self.m)
    }

    /// `Tr^n_m(x) = x + x^(2^m)`.
    pub fn relative_trace(&self, x: u32) -> u32 {
        x ^ self.conjugate(x)
    }

    /// `ξ = α^(2^m - 1)`, the canonical generator of `U_{2^m+1}`.
    pub fn xi(&self) -> u32 {
        self.xi
    }

    /// `U_{2^m+1}` as `ξ^0, ..., ξ^(2^m)`.
    pub fn units(&self) -> &[u32] {
        &self.units
    }

    pub fn is_unit(&self, u: u32) -> bool {
        u != 0 && self.big.pow(u, (1u64 << self.m) + 1) == 1
    }

    /// The primitive cube root of unity `g = α^((2^n-1)/3)`.
    pub fn cube_root(&self) -> u32 {
        self.cube_root
    }

    /// The embedded F_4 as `[0, 1, g, g^2]`.
    pub fn f4(&self) -> [u32; 4] {
        [0, 1, self.cube_root, self.big.square(self.cube_root)]
    }

    pub fn in_f4(&self, b: u32) -> bool {
        self.big.pow(b, 4) == b
    }

    /// `Tr^2_1(y) = y + y^2` for `y` in F_4, as a bit.
    pub fn tr2(&self, y: u32) -> u8 {
        let t = y ^ self.big.square(y);
        debug_assert!(t <= 1, "Tr^2_1 applied outside F_4");
        t as u8
    }

    /// `Tr^n_2(b)`, the F_4 coefficient that `Tr^n_1(b y)` sees for `y` in F_4.
    pub fn trace_to_f4(&self, b: u32) -> u32 {
        self.big.trace(b, 2).expect("2 divides 2m")
    }
}

fn minimal_polynomial_bits(small: &FieldSpec, beta: u32) -> u64 {
    // prod_{i<m} (X + β^(2^i)), coefficients land in {0, 1}.
    let mut coeffs: Vec<u32> = vec![1];
    let mut root = beta;
    for _ in 0..small.degree() {
        let mut next = vec![0u32; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] ^= c;
            next[i] ^= small.mul(c, root);
        }
        coeffs = next;
        root = small.square(root);
    }
    coeffs.iter().enumerate().fold(0u64, |acc, (i, &c)| {
        debug_assert!(c <= 1);
        acc | ((c as u64) << i)
    })
}

fn embedding(big: &FieldSpec, small: &FieldSpec) -> Vec<u32> {
    let small_order = small.order() as u64;
    let step = big.order() as u64 / small_order;
    let minpoly = minimal_polynomial_bits(small, small.generator());
    let is_root = |gamma: u32| {
        let mut acc = 0u32;
        for i in (0..=small.degree()).rev() {
            acc = big.mul(acc, gamma) ^ ((minpoly >> i) & 1) as u32;
        }
        acc == 0
    };
    let gamma = (1..small_order)
        .filter(|&t| gcd(t, small_order) == 1)
        .map(|t| big.pow(big.generator(), step * t))
        .find(|&g| is_root(g))
        .expect("a subfield of order 2^m exists when m divides 2m");
    let mut embed = vec![0u32; small.size() as usize];
    let mut s = 1u32;
    let mut b = 1u32;
    for _ in 0..small_order {
        embed[s as usize] = b;
        s = small.mul(s, small.generator());
        b = big.mul(b, gamma);
    }
    embed
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_is_a_field_homomorphism() {
        for m in [3u32, 5] {
            let ext = QuadraticExtension::with_defaults(m).unwrap();
            let (big, small) = (ext.big(), ext.small());
            for a in small.elements() {
                assert!(big.in_subfield(ext.embed(a), m));
                assert_eq!(ext.restrict(ext.embed(a)), Ok(a));
                for b in small.elements() {
                    assert_eq!(ext.embed(a ^ b), ext.embed(a) ^ ext.embed(b));
                    assert_eq!(ext.embed(small.mul(a, b)), big.mul(ext.embed(a), ext.embed(b)));
                }
            }
            let fixed = big.elements().filter(|&x| ext.conjugate(x) == x).count();
            assert_eq!(fixed, small.size() as usize);
            assert_eq!(big.elements().filter(|&x| ext.in_subfield(x)).count(), fixed);
        }
    }

    #[test]
    fn custom_moduli() {
        // x^6 + x^4 + x^3 + x + 1 and x^3 + x^2 + 1
        let ext = QuadraticExtension::new(3, Some(0b1011011), Some(0b1101)).unwrap();
        for a in ext.small().elements() {
            for b in ext.small().elements() {
                let prod = ext.small().mul(a, b);
                assert_eq!(ext.embed(prod), ext.big().mul(ext.embed(a), ext.embed(b)));
            }
        }
    }

    #[test]
    fn f4_and_units() {
        let ext = QuadraticExtension::with_defaults(3).unwrap();
        let f4 = ext.f4();
        for &b in &f4 {
            assert!(ext.in_f4(b));
        }
        let g = ext.cube_root();
        assert_eq!(ext.big().mul(g, g) ^ g ^ 1, 0);
        assert_eq!(ext.tr2(0), 0);
        assert_eq!(ext.tr2(1), 0);
        assert_eq!(ext.tr2(f4[2]), 1);
        assert_eq!(ext.tr2(f4[3]), 1);
        // m odd: the cube roots of unity sit inside U_{2^m+1}.
        assert!(ext.is_unit(g));
        assert_eq!(ext.units().len(), 9);
        assert_eq!(ext.units()[1], ext.xi());
        for &u in ext.units() {
            assert!(ext.is_unit(u));
        }
    }

    #[test]
    fn trace_to_f4_on_subfield_is_absolute_trace() {
        let ext = QuadraticExtension::with_defaults(5).unwrap();
        for b in ext.small().elements() {
            let t = ext.trace_to_f4(ext.embed(b));
            assert_eq!(t, ext.small().abs_trace(b) as u32);
        }
        for &b in &ext.f4() {
            assert_eq!(ext.trace_to_f4(b), b);
        }
    }
}
