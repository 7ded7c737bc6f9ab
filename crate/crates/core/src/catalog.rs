//! Named criteria, their domains, and a per-spec assessment that runs every
//! applicable one against a reference verdict.

use serde::Serialize;

use crate::boolfun::is_hyper_bent_def;
use crate::criteria::{
    charpin_gong_criterion, dickson_split_criterion, kloosterman_criterion, lambda_sum, partial_sum_criterion,
    punctured_sum_criterion, rational_trace_criterion, unit_f4_criterion, weight_criterion, CriteriaError,
    CriterionReport,
};
use crate::curves::{curve_criterion, CurveSpec};
use crate::families::{split_coefficient, FamilyEvaluator, FamilySpec};
use crate::field::QuadraticExtension;

/// Largest `n = 2m` at which the extended-WHT definition is evaluated.
pub const ORACLE_MAX_N: u32 = 14;

pub type RunFn = fn(&QuadraticExtension, &FamilySpec) -> Result<CriterionReport, CriteriaError>;
pub type AppliesFn = fn(&QuadraticExtension, &FamilySpec) -> bool;

#[derive(Clone, Copy)]
pub struct Criterion {
    pub name: &'static str,
    pub applies: AppliesFn,
    pub run: RunFn,
}

impl std::fmt::Debug for Criterion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name)
    }
}

/// Hyper-bent by the extended Walsh-Hadamard definition.
pub fn definition_oracle(ext: &QuadraticExtension, spec: &FamilySpec) -> bool {
    let table = FamilyEvaluator::new(ext, spec).truth_table();
    is_hyper_bent_def(ext.big(), &table).expect("family tables match their field")
}

fn splits(ext: &QuadraticExtension, spec: &FamilySpec) -> bool {
    spec.terms().iter().all(|t| ext.big().pow(spec.u0(), t.r) != 1)
}

fn odd_m(ext: &QuadraticExtension) -> bool {
    ext.m() % 2 == 1
}

/// `Tr^n_1((a + c u0) x^(2^m-1)) + Tr^2_1(b x^((2^n-1)/3))` with `u0` a cube
/// root of unity. The criteria do not read `b`, so every F_4 value is in range.
fn is_cube_root_binomial(ext: &QuadraticExtension, spec: &FamilySpec) -> bool {
    odd_m(ext) && spec.u0() == ext.cube_root() && matches!(spec.terms(), [t] if t.r == 1)
}

/// `(a, c)` with `a_1 = a + c u0`.
fn binomial_coefficients(ext: &QuadraticExtension, spec: &FamilySpec) -> Result<(u32, u32), CriteriaError> {
    let s = split_coefficient(ext, spec.terms()[0].a, spec.u0(), 1)?;
    Ok((s.a_prime, s.a_dprime))
}

fn lambda_criterion(ext: &QuadraticExtension, spec: &FamilySpec) -> Result<CriterionReport, CriteriaError> {
    Ok(CriterionReport::new(lambda_sum(ext, spec), 1))
}

fn rational_trace(ext: &QuadraticExtension, spec: &FamilySpec) -> Result<CriterionReport, CriteriaError> {
    let (a, c) = binomial_coefficients(ext, spec)?;
    rational_trace_criterion(ext, a, c)
}

fn curve_count(ext: &QuadraticExtension, spec: &FamilySpec) -> Result<CriterionReport, CriteriaError> {
    let (a, c) = binomial_coefficients(ext, spec)?;
    let curve = CurveSpec::new(ext.small(), a, c)?;
    Ok(curve_criterion(ext.small(), &curve)?)
}

fn kloosterman_applies(ext: &QuadraticExtension, spec: &FamilySpec) -> bool {
    match spec.terms() {
        [t] if t.r == 1 && t.a != 0 && ext.in_subfield(t.a) => match spec.b() {
            None => true,
            Some(b) => b != 1 && odd_m(ext),
        },
        _ => false,
    }
}

/// Every criterion with its domain, in report column order.
pub fn standard_catalog() -> Vec<Criterion> {
    vec![
        Criterion { name: "lambda", applies: |_, _| true, run: lambda_criterion },
        Criterion { name: "dickson-split", applies: splits, run: dickson_split_criterion },
        Criterion {
            name: "unit-f4",
            applies: |ext, spec| spec.b() == Some(1) && splits(ext, spec),
            run: unit_f4_criterion,
        },
        Criterion {
            name: "punctured-sum",
            applies: |ext, spec| !spec.has_b_term() && splits(ext, spec),
            run: punctured_sum_criterion,
        },
        Criterion { name: "partial-sum", applies: |ext, _| odd_m(ext), run: partial_sum_criterion },
        Criterion {
            name: "weight",
            applies: |ext, spec| !spec.has_b_term() && splits(ext, spec),
            run: weight_criterion,
        },
        Criterion {
            name: "charpin-gong",
            applies: |ext, spec| !spec.has_b_term() && spec.terms().iter().all(|t| ext.in_subfield(t.a)),
            run: charpin_gong_criterion,
        },
        Criterion { name: "kloosterman", applies: kloosterman_applies, run: kloosterman_criterion },
        Criterion { name: "rational-trace", applies: is_cube_root_binomial, run: rational_trace },
        Criterion { name: "curve-count", applies: is_cube_root_binomial, run: curve_count },
    ]
}

pub fn criterion_names(catalog: &[Criterion]) -> Vec<&'static str> {
    catalog.iter().map(|c| c.name).collect()
}

/// What the criteria are compared with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reference {
    /// Extended Walsh-Hadamard definition.
    Definition,
    /// `Λ(f) = 1` only; the definition was skipped.
    CriteriaOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionOutcome {
    pub name: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<CriterionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// `None` when the criterion does not apply.
    pub agrees: Option<bool>,
}

impl CriterionOutcome {
    pub fn applicable(&self) -> bool {
        self.agrees.is_some()
    }

    pub fn verdict(&self) -> Option<bool> {
        self.report.as_ref().map(|r| r.verdict)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assessment {
    pub lambda: i64,
    pub reference: Reference,
    /// The definition verdict when it was evaluated, else `Λ = 1`.
    pub hyper_bent: bool,
    pub criteria: Vec<CriterionOutcome>,
}

impl Assessment {
    pub fn consistent(&self) -> bool {
        self.criteria.iter().all(|c| c.agrees != Some(false))
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &CriterionOutcome> {
        self.criteria.iter().filter(|c| c.agrees == Some(false))
    }

    pub fn outcome(&self, name: &str) -> Option<&CriterionOutcome> {
        self.criteria.iter().find(|c| c.name == name)
    }
}

/// Runs every applicable criterion. An applicable criterion that errors
/// counts as a disagreement.
pub fn assess(ext: &QuadraticExtension, spec: &FamilySpec, catalog: &[Criterion], use_definition: bool) -> Assessment {
    let lambda = lambda_sum(ext, spec);
    let (reference, hyper_bent) = if use_definition && ext.big().degree() <= ORACLE_MAX_N {
        (Reference::Definition, definition_oracle(ext, spec))
    } else {
        (Reference::CriteriaOnly, lambda == 1)
    };
    let criteria = catalog
        .iter()
        .map(|c| {
            if !(c.applies)(ext, spec) {
                return CriterionOutcome { name: c.name, report: None, error: None, agrees: None };
            }
            match (c.run)(ext, spec) {
                Ok(report) => {
                    let agrees = Some(report.verdict == hyper_bent);
                    CriterionOutcome { name: c.name, report: Some(report), error: None, agrees }
                }
                Err(e) => {
                    CriterionOutcome { name: c.name, report: None, error: Some(e.to_string()), agrees: Some(false) }
                }
            }
        })
        .collect();
    Assessment { lambda, reference, hyper_bent, criteria }
}
