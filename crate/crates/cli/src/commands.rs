use anyhow::{bail, Context, Result};
use serde::Serialize;

use hyperbent_core::catalog::{assess, criterion_names, standard_catalog, Assessment, Reference, ORACLE_MAX_N};
use hyperbent_core::crosscheck::{self, CrosscheckConfig, CrosscheckReport, Scope};
use hyperbent_core::curves::{curve_criterion, CurveSpec};
use hyperbent_core::families::{kloosterman as kloosterman_sum, FamilySpec, SpecJson};
use hyperbent_core::field::{parse_hex, FieldDescriptor, FieldSpec, QuadraticExtension};

use crate::args::{Cli, CrosscheckArgs, CurveCountArgs, FieldInfoArgs, KloostermanArgs, ScopeArg, VerifyArgs};
use crate::output::{emit, hex, opt, Table};

fn modulus(arg: &Option<String>) -> Result<Option<u64>> {
    arg.as_deref().map(|s| parse_hex(s).with_context(|| format!("modulus {s}"))).transpose()
}

pub fn extension(cli: &Cli, m: u32) -> Result<QuadraticExtension> {
    let ext = QuadraticExtension::new(m, modulus(&cli.common.modulus)?, modulus(&cli.common.sub_modulus)?)?;
    Ok(ext)
}

fn small_field(cli: &Cli, m: u32) -> Result<FieldSpec> {
    Ok(FieldSpec::new(m, modulus(&cli.common.sub_modulus)?)?)
}

#[derive(Serialize)]
struct FieldInfo {
    m: u32,
    big: FieldDescriptor,
    small: FieldDescriptor,
    /// Image of the subfield generator.
    subfield_generator: String,
    xi: String,
    cube_root: String,
    unit_circle: Vec<String>,
    f4: Vec<String>,
}

pub fn field_info(cli: &Cli, args: &FieldInfoArgs) -> Result<bool> {
    let ext = extension(cli, args.m)?;
    let [big, small] = ext.descriptors();
    let info = FieldInfo {
        m: args.m,
        subfield_generator: hex(ext.embed(ext.small().generator())),
        xi: hex(ext.xi()),
        cube_root: hex(ext.cube_root()),
        unit_circle: ext.units().iter().map(|&u| hex(u)).collect(),
        f4: ext.f4().iter().map(|&b| hex(b)).collect(),
        big,
        small,
    };
    let mut table = Table::new(["key", "value"]);
    let pairs = [
        ("m", info.m.to_string()),
        ("big_degree", info.big.degree.to_string()),
        ("big_modulus", info.big.modulus.clone()),
        ("big_generator", info.big.generator.clone()),
        ("small_degree", info.small.degree.to_string()),
        ("small_modulus", info.small.modulus.clone()),
        ("small_generator", info.small.generator.clone()),
        ("subfield_generator", info.subfield_generator.clone()),
        ("xi", info.xi.clone()),
        ("cube_root", info.cube_root.clone()),
        ("unit_circle", info.unit_circle.join(" ")),
        ("f4", info.f4.join(" ")),
    ];
    for (k, v) in pairs {
        table.push(vec![k.to_string(), v]);
    }
    emit(cli, &info, &table)?;
    Ok(true)
}

#[derive(Serialize)]
struct VerifyResult {
    hash: String,
    spec: SpecJson,
    #[serde(flatten)]
    assessment: Assessment,
    consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

fn report_cells(a: &Assessment, name: &str) -> [String; 3] {
    match a.outcome(name) {
        Some(o) => match (&o.report, &o.error) {
            (Some(r), _) => [r.verdict.to_string(), r.lhs.to_string(), r.rhs.to_string()],
            (_, Some(_)) => ["error".into(), String::new(), String::new()],
            _ => Default::default(),
        },
        None => Default::default(),
    }
}

fn reference_name(r: Reference) -> &'static str {
    match r {
        Reference::Definition => "definition",
        Reference::CriteriaOnly => "criteria-only",
    }
}

pub fn verify(cli: &Cli, args: &VerifyArgs) -> Result<bool> {
    let text = std::fs::read_to_string(&args.spec).with_context(|| format!("reading {}", args.spec.display()))?;
    let json = SpecJson::parse(&text).with_context(|| format!("parsing {}", args.spec.display()))?;
    let big_modulus = match modulus(&cli.common.modulus)? {
        Some(m) => Some(m),
        None => Some(parse_hex(&json.field).context("spec field modulus")?),
    };
    let ext = QuadraticExtension::new(json.m, big_modulus, modulus(&cli.common.sub_modulus)?)?;
    let spec = FamilySpec::from_json(&ext, &json).context("invalid spec")?;
    let mut assessment = assess(&ext, &spec, &standard_catalog(), !args.no_oracle);
    if let Some(name) = &args.corrupt {
        let Some(o) = assessment.criteria.iter_mut().find(|c| c.name == name) else {
            bail!("unknown criterion {name}");
        };
        if let (Some(r), Some(agrees)) = (o.report.as_mut(), o.agrees) {
            r.verdict = !r.verdict;
            o.agrees = Some(!agrees);
        }
    }
    let note = (!args.no_oracle && ext.big().degree() > ORACLE_MAX_N)
        .then(|| format!("field too large for the definition oracle (n > {ORACLE_MAX_N}), criteria-only"));
    if let Some(n) = &note {
        eprintln!("note: {n}");
    }
    let consistent = assessment.consistent();

    let mut table = Table::new(["criterion", "applicable", "verdict", "lhs", "rhs", "agrees", "error"]);
    table.comments.push(format!("spec {}", spec.hash(&ext)));
    table.comments.push(format!(
        "lambda {} reference {} hyper_bent {}",
        assessment.lambda,
        reference_name(assessment.reference),
        assessment.hyper_bent
    ));
    for o in &assessment.criteria {
        let [v, l, r] = report_cells(&assessment, o.name);
        table.push(vec![
            o.name.to_string(),
            o.applicable().to_string(),
            v,
            l,
            r,
            opt(o.agrees),
            o.error.clone().unwrap_or_default(),
        ]);
    }
    let result = VerifyResult { hash: spec.hash(&ext), spec: json, assessment, consistent, note };
    emit(cli, &result, &table)?;
    Ok(consistent)
}

fn crosscheck_table(report: &CrosscheckReport) -> Table {
    let names = criterion_names(&standard_catalog());
    let mut header: Vec<String> =
        ["hash", "family", "terms", "b", "u0", "lambda", "reference", "hyper_bent"].map(String::from).to_vec();
    for n in &names {
        header.extend([n.to_string(), format!("{n}_lhs"), format!("{n}_rhs")]);
    }
    let mut table = Table::new(header);
    for s in &report.suites {
        table.comments.push(format!(
            "suite {} kind={} exhaustive={} cases={} passed={} failed={}",
            s.name,
            serde_json::to_value(s.kind).unwrap().as_str().unwrap(),
            s.exhaustive,
            s.cases,
            s.passed(),
            s.failures
        ));
    }
    for row in &report.rows {
        let terms: Vec<String> = row.spec.terms.iter().map(|t| format!("{}:{}", t.r, t.a)).collect();
        let a = &row.assessment;
        let mut cells = vec![
            row.hash.clone(),
            row.family.to_string(),
            terms.join(";"),
            row.spec.b.clone().unwrap_or_default(),
            row.spec.u0.clone().unwrap_or_default(),
            a.lambda.to_string(),
            reference_name(a.reference).to_string(),
            a.hyper_bent.to_string(),
        ];
        for n in &names {
            cells.extend(report_cells(a, n));
        }
        table.push(cells);
    }
    table
}

pub fn crosscheck(cli: &Cli, args: &CrosscheckArgs) -> Result<bool> {
    let scope = match args.scope {
        ScopeArg::Full => Scope::Full,
        ScopeArg::Criteria => Scope::Criteria,
        ScopeArg::Identities => Scope::Identities,
    };
    let mut cfg = CrosscheckConfig::new(args.m, scope, cli.common.seed);
    cfg.samples = args.samples;
    cfg.identity_samples = args.identity_samples;
    if args.m % 2 == 0 {
        bail!("m = {} rejected: the unit-circle criteria need m odd", args.m);
    }
    let ext = extension(cli, args.m)?;
    let report = crosscheck::run(&ext, &cfg)?;
    for s in &report.suites {
        let status = if s.ok() { "ok" } else { "FAIL" };
        eprintln!("{status:4} {:32} {:>7}/{:<7}", s.name, s.passed(), s.cases);
        if let Some(f) = &s.first_failure {
            eprintln!("     first failure: {f}");
        }
    }
    emit(cli, &report, &crosscheck_table(&report))?;
    Ok(report.failures() == 0)
}

#[derive(Serialize)]
struct KloostermanRow {
    a: String,
    k: i64,
}

pub fn kloosterman(cli: &Cli, args: &KloostermanArgs) -> Result<bool> {
    let field = small_field(cli, args.m)?;
    let values: Vec<u32> = match (&args.a, args.all) {
        (Some(a), _) => vec![field.parse(a)?],
        (None, true) => field.elements().collect(),
        (None, false) => bail!("pass --all or --a"),
    };
    let rows: Vec<KloostermanRow> =
        values.iter().map(|&a| KloostermanRow { a: hex(a), k: kloosterman_sum(&field, a) }).collect();
    let mut table = Table::new(["a", "k"]);
    for r in &rows {
        table.push(vec![r.a.clone(), r.k.to_string()]);
    }
    emit(cli, &rows, &table)?;
    Ok(true)
}

#[derive(Serialize)]
struct CurveCount {
    count: i64,
    target: i64,
    verdict: bool,
}

pub fn curve_count(cli: &Cli, args: &CurveCountArgs) -> Result<bool> {
    let field = small_field(cli, args.m)?;
    let curve = CurveSpec::new(&field, field.parse(&args.a)?, field.parse(&args.c)?)?;
    let r = curve_criterion(&field, &curve)?;
    let result = CurveCount { count: r.lhs, target: r.rhs, verdict: r.verdict };
    let mut table = Table::new(["count", "target", "verdict"]);
    table.push(vec![result.count.to_string(), result.target.to_string(), result.verdict.to_string()]);
    emit(cli, &result, &table)?;
    Ok(true)
}
