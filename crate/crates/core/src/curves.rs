//! Point counts of `C: y^2 + y D(x) = (c x^2 + a) D(x)`, `D(x) = x^2 + x + 1`,
//! over GF(2^m) for m odd.

use serde::Serialize;
use thiserror::Error;

use crate::criteria::{chi, CriterionReport};
use crate::field::{FieldError, FieldSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("m = {0} is not odd")]
    BadM(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CurveSpec {
    pub a: u32,
    pub c: u32,
    pub m: u32,
}

impl CurveSpec {
    pub fn new(field: &FieldSpec, a: u32, c: u32) -> Result<Self, CurveError> {
        let m = field.degree();
        if m % 2 == 0 {
            return Err(CurveError::BadM(m));
        }
        field.check(a as u64)?;
        field.check(c as u64)?;
        Ok(CurveSpec { a, c, m })
    }

    fn check(&self, field: &FieldSpec) -> Result<(), CurveError> {
        CurveSpec::new(field, self.a, self.c).map(|_| ())
    }
}

/// `(c x^2 + a)/D(x)`; `D` has no root in GF(2^m) for m odd.
fn ratio(field: &FieldSpec, curve: &CurveSpec, x: u32) -> u32 {
    let d = field.square(x) ^ x ^ 1;
    field.div(field.mul(curve.c, field.square(x)) ^ curve.a, d)
}

/// Affine solutions plus one point at infinity.
///
/// For fixed `x`, substituting `y = t D(x)` gives `t^2 + t = (c x^2 + a)/D(x)`,
/// which has two solutions when that value has trace 0 and none otherwise.
pub fn count_points(field: &FieldSpec, curve: &CurveSpec) -> Result<u64, CurveError> {
    curve.check(field)?;
    let affine: u64 = field.elements().map(|x| if field.abs_trace(ratio(field, curve, x)) == 0 { 2 } else { 0 }).sum();
    Ok(affine + 1)
}

/// `Σ_x (-1)^Tr((c x^2 + a)/D(x))`.
pub fn rational_trace_sum(field: &FieldSpec, curve: &CurveSpec) -> Result<i64, CurveError> {
    curve.check(field)?;
    Ok(field.elements().map(|x| chi(field.abs_trace(ratio(field, curve, x)))).sum())
}

/// `2^m + 2 - (-1)^Tr(c)`.
pub fn curve_target(field: &FieldSpec, curve: &CurveSpec) -> i64 {
    (1i64 << curve.m) + 2 - chi(field.abs_trace(curve.c))
}

/// Hyper-bent iff `#C = 2^m + 2 - (-1)^Tr(c)`.
pub fn curve_criterion(field: &FieldSpec, curve: &CurveSpec) -> Result<CriterionReport, CurveError> {
    let count = count_points(field, curve)? as i64;
    Ok(CriterionReport::new(count, curve_target(field, curve)))
}
