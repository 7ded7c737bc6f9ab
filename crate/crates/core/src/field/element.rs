use std::fmt;
use std::ops::{Add, Div, Mul};

use super::{FieldError, FieldSpec};

/// A field value bound to its [`FieldSpec`].
///
/// The `checked_*` methods report [`FieldError::FieldMismatch`] for operands
/// from different fields; the operator impls panic on that instead.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    bits: u32,
    field: &'f FieldSpec,
}

impl<'f> FieldElement<'f> {
    pub fn new(field: &'f FieldSpec, bits: u32) -> Result<Self, FieldError> {
        Ok(FieldElement { bits: field.check(bits as u64)?, field })
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn field(self) -> &'f FieldSpec {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    fn same_field(self, other: Self) -> Result<(), FieldError> {
        if std::ptr::eq(self.field, other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    fn with(self, bits: u32) -> Self {
        FieldElement { bits, field: self.field }
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self, FieldError> {
        self.same_field(rhs)?;
        Ok(self.with(self.bits ^ rhs.bits))
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self, FieldError> {
        self.same_field(rhs)?;
        Ok(self.with(self.field.mul(self.bits, rhs.bits)))
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self, FieldError> {
        self.same_field(rhs)?;
        Ok(self.with(self.field.div(self.bits, rhs.bits)))
    }

    /// `1/x` with `1/0 = 0`.
    pub fn inv(self) -> Self {
        self.with(self.field.inv(self.bits))
    }

    pub fn pow(self, e: i64) -> Self {
        self.with(self.field.pow_signed(self.bits, e))
    }

    pub fn square(self) -> Self {
        self.with(self.field.square(self.bits))
    }

    pub fn sqrt(self) -> Self {
        self.with(self.field.sqrt(self.bits))
    }

    pub fn abs_trace(self) -> u8 {
        self.field.abs_trace(self.bits)
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits && self.field == other.field
    }
}

impl Eq for FieldElement<'_> {}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}@GF(2^{})", self.bits, self.field.degree())
    }
}

impl fmt::Display for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.bits)
    }
}

impl<'f> Add for FieldElement<'f> {
    type Output = FieldElement<'f>;
    fn add(self, rhs: Self) -> Self::Output {
        self.checked_add(rhs).expect("field mismatch")
    }
}

impl<'f> Mul for FieldElement<'f> {
    type Output = FieldElement<'f>;
    fn mul(self, rhs: Self) -> Self::Output {
        self.checked_mul(rhs).expect("field mismatch")
    }
}

impl<'f> Div for FieldElement<'f> {
    type Output = FieldElement<'f>;
    fn div(self, rhs: Self) -> Self::Output {
        self.checked_div(rhs).expect("field mismatch")
    }
}
