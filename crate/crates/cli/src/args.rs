use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser, Serialize)]
#[command(name = "hyperbent", version, about = "Hyper-bentness checks for Dillon-exponent Boolean functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args, Serialize)]
pub struct Common {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Seed for sampled modes; exhaustive modes ignore it.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Modulus of GF(2^{2m}) as hex.
    #[arg(long, global = true)]
    pub modulus: Option<String>,
    /// Modulus of GF(2^m) as hex.
    #[arg(long, global = true)]
    pub sub_modulus: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Command {
    /// Describe GF(2^{2m}), its subfield GF(2^m) and the unit circle.
    FieldInfo(FieldInfoArgs),
    /// Run every applicable criterion and the definition on one spec file.
    Verify(VerifyArgs),
    /// Enumerate a family and emit the hyper-bent members.
    Search(SearchArgs),
    /// Run the oracle-equivalence and identity suites.
    Crosscheck(CrosscheckArgs),
    /// Kloosterman sums over GF(2^m).
    Kloosterman(KloostermanArgs),
    /// Point count of y^2 + y D(x) = (c x^2 + a) D(x), D(x) = x^2 + x + 1.
    CurveCount(CurveCountArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct FieldInfoArgs {
    #[arg(short)]
    pub m: u32,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    /// Family spec JSON.
    pub spec: PathBuf,
    /// Skip the extended Walsh-Hadamard definition.
    #[arg(long)]
    pub no_oracle: bool,
    /// Invert one criterion's verdict (harness self-test).
    #[arg(long, hide = true)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrupt: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct SearchArgs {
    #[arg(short)]
    pub m: u32,
    /// Comma-separated coset leaders, one term each.
    #[arg(long = "r", value_delimiter = ',', default_value = "1")]
    pub r: Vec<u64>,
    /// Coefficient range per term: all, subfield, subfield-nonzero, or a
    /// comma-separated hex list (possibly empty).
    #[arg(long, default_value = "all")]
    pub a_range: String,
    /// F_4 coefficient range.
    #[arg(long, value_enum, default_value_t = BRange::None)]
    pub b_range: BRange,
    /// u0 as hex; defaults to the generator of the unit circle.
    #[arg(long)]
    pub u0: Option<String>,
    /// Draw this many candidates instead of enumerating.
    #[arg(long)]
    pub sample: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BRange {
    /// No F_4 term.
    None,
    /// 0, 1, g, g^2.
    All,
    /// g and g^2.
    Primitive,
    /// b = 1.
    One,
}

#[derive(Debug, Args, Serialize)]
pub struct CrosscheckArgs {
    #[arg(short)]
    pub m: u32,
    #[arg(long, value_enum, default_value_t = ScopeArg::Full)]
    pub scope: ScopeArg,
    /// Oracle specs drawn for m > 3.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// Cases per identity suite for m > 3.
    #[arg(long, default_value_t = 10_000)]
    pub identity_samples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScopeArg {
    Full,
    Criteria,
    Identities,
}

#[derive(Debug, Args, Serialize)]
pub struct KloostermanArgs {
    #[arg(short)]
    pub m: u32,
    /// Every a in GF(2^m).
    #[arg(long, conflicts_with = "a")]
    pub all: bool,
    /// One value as hex.
    #[arg(long)]
    pub a: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct CurveCountArgs {
    #[arg(short)]
    pub m: u32,
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub c: String,
}
