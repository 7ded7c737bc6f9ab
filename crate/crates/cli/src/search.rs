use anyhow::{bail, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use hyperbent_core::boolfun::algebraic_degree;
use hyperbent_core::criteria::{dickson_split_criterion, lambda_sum};
use hyperbent_core::families::{kloosterman, FamilyEvaluator, FamilySpec, SpecJson, Term};
use hyperbent_core::field::QuadraticExtension;

use crate::args::{BRange, Cli, SearchArgs};
use crate::commands::extension;
use crate::output::{emit, hex, opt, Table};

/// Largest coefficient space enumerated without `--sample`.
pub const MAX_EXHAUSTIVE: u128 = 1 << 24;

fn a_values(ext: &QuadraticExtension, range: &str) -> Result<Vec<u32>> {
    let big = ext.big();
    Ok(match range.trim() {
        "all" => big.elements().collect(),
        "subfield" => ext.small().elements().map(|s| ext.embed(s)).collect(),
        "subfield-nonzero" => (1..ext.small().size()).map(|s| ext.embed(s)).collect(),
        "" => Vec::new(),
        list => list.split(',').map(|s| big.parse(s)).collect::<Result<_, _>>()?,
    })
}

fn b_values(ext: &QuadraticExtension, range: BRange) -> Vec<Option<u32>> {
    let [_, one, g, g2] = ext.f4();
    match range {
        BRange::None => vec![None],
        BRange::All => vec![None, Some(one), Some(g), Some(g2)],
        BRange::Primitive => vec![Some(g), Some(g2)],
        BRange::One => vec![Some(one)],
    }
}

#[derive(Serialize)]
struct Certified {
    hash: String,
    spec: SpecJson,
    lambda: i64,
    /// `K_m(a)` for a single `r = 1` term with `a` in GF(2^m)*.
    #[serde(skip_serializing_if = "Option::is_none")]
    kloosterman: Option<i64>,
    degree: i32,
    /// Verdict of the Dickson-split criterion, when its split exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    dickson_split: Option<bool>,
}

#[derive(Serialize)]
struct SearchResult {
    space: u128,
    candidates: usize,
    sampled: bool,
    certified: Vec<Certified>,
    /// Candidates where the Dickson-split verdict differs from `Λ = 1`.
    dickson_split_mismatches: usize,
}

struct Evaluated {
    spec: FamilySpec,
    lambda: i64,
    dickson_split: Option<bool>,
}

pub fn run(cli: &Cli, args: &SearchArgs) -> Result<bool> {
    let ext = extension(cli, args.m)?;
    let a_vals = a_values(&ext, &args.a_range)?;
    let b_vals = b_values(&ext, args.b_range);
    let u0 = match &args.u0 {
        Some(s) => ext.big().parse(s)?,
        None => ext.xi(),
    };
    let k = args.r.len() as u32;
    let space = (a_vals.len() as u128).pow(k) * b_vals.len() as u128;
    let build = |coeffs: &[u32], b: Option<u32>| {
        let terms = args.r.iter().zip(coeffs).map(|(&r, &a)| Term { r, a }).collect();
        FamilySpec::new(&ext, terms, b, u0)
    };
    // Validates r and u0 even when the space is empty.
    build(&vec![0; args.r.len()], None)?;

    let candidates: Vec<(Vec<u32>, Option<u32>)> = match args.sample {
        _ if space == 0 => Vec::new(),
        Some(n) => {
            let mut rng = ChaCha8Rng::seed_from_u64(cli.common.seed);
            (0..n)
                .map(|_| {
                    let coeffs = (0..k).map(|_| a_vals[rng.gen_range(0..a_vals.len())]).collect();
                    (coeffs, b_vals[rng.gen_range(0..b_vals.len())])
                })
                .collect()
        }
        None if space > MAX_EXHAUSTIVE => {
            bail!("space of {space} candidates exceeds {MAX_EXHAUSTIVE}; pass --sample N")
        }
        None => (0..space as u64)
            .map(|mut i| {
                let b = b_vals[(i % b_vals.len() as u64) as usize];
                i /= b_vals.len() as u64;
                let coeffs = (0..k)
                    .map(|_| {
                        let a = a_vals[(i % a_vals.len() as u64) as usize];
                        i /= a_vals.len() as u64;
                        a
                    })
                    .collect();
                (coeffs, b)
            })
            .collect(),
    };

    let evaluated: Vec<Evaluated> = candidates
        .par_iter()
        .map(|(coeffs, b)| {
            let spec = build(coeffs, *b).expect("validated above");
            let lambda = lambda_sum(&ext, &spec);
            let dickson_split = dickson_split_criterion(&ext, &spec).ok().map(|r| r.verdict);
            Evaluated { spec, lambda, dickson_split }
        })
        .collect();
    let dickson_split_mismatches =
        evaluated.iter().filter(|e| e.dickson_split.is_some_and(|v| v != (e.lambda == 1))).count();

    let certified: Vec<Certified> = evaluated
        .par_iter()
        .filter(|e| e.lambda == 1)
        .map(|e| {
            let spec = &e.spec;
            let kloosterman = match spec.terms() {
                [t] if t.r == 1 && t.a != 0 => ext.restrict(t.a).ok().map(|a| kloosterman(ext.small(), a)),
                _ => None,
            };
            let degree = algebraic_degree(&FamilyEvaluator::new(&ext, spec).truth_table());
            Certified {
                hash: spec.hash(&ext),
                spec: spec.to_json(&ext),
                lambda: e.lambda,
                kloosterman,
                degree,
                dickson_split: e.dickson_split,
            }
        })
        .collect();

    let mut table = Table::new(["hash", "terms", "b", "u0", "lambda", "kloosterman", "degree", "dickson_split"]);
    table.comments.push(format!(
        "space {space} candidates {} dickson_split_mismatches {dickson_split_mismatches}",
        candidates.len()
    ));
    for c in &certified {
        let terms: Vec<String> = c.spec.terms.iter().map(|t| format!("{}:{}", t.r, t.a)).collect();
        table.push(vec![
            c.hash.clone(),
            terms.join(";"),
            c.spec.b.clone().unwrap_or_default(),
            hex(u0),
            c.lambda.to_string(),
            opt(c.kloosterman),
            c.degree.to_string(),
            opt(c.dickson_split),
        ]);
    }
    let result = SearchResult {
        space,
        candidates: candidates.len(),
        sampled: args.sample.is_some(),
        certified,
        dickson_split_mismatches,
    };
    emit(cli, &result, &table)?;
    Ok(dickson_split_mismatches == 0)
}
