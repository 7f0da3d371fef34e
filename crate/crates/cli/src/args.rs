use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gauss_appell::EulerConvention;

#[derive(Debug, Parser)]
#[command(
    name = "gap",
    version,
    about = "Exact Gauss-Appell polynomial tables, checks and plots"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write output to PATH instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print exact polynomial coefficients for each requested n.
    Gen(GenArgs),
    /// Evaluate one polynomial at a rational point.
    Eval(EvalArgs),
    /// Run identity verification suites and print a JSON-lines report.
    Verify(VerifyArgs),
    /// Sample a polynomial on a grid and emit CSV or SVG.
    Plot(PlotArgs),
    /// Print Appell numbers and log-derivative coefficients.
    Numbers(NumbersArgs),
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// bernoulli | euler | genocchi | hermite | custom
    #[arg(long, default_value = "bernoulli")]
    pub family: String,

    #[arg(long, alias = "convention", value_parser = parse_convention, default_value = "integer")]
    pub euler_convention: EulerConvention,

    /// Comma-separated coefficients A_0,A_1,... of A(t) for `--family custom`.
    #[arg(long, value_name = "LIST")]
    pub custom: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct SamplingArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Number of sampled (a,b,c) triples when no parameters are given.
    #[arg(long, default_value_t = 5)]
    pub trials: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Svg,
    Text,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    /// Index, list (`0,2,5`) or inclusive range (`0..4`).
    #[arg(long, default_value = "0..4")]
    pub n: String,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Expansion,
    Recurrence,
    Shift,
    Summation,
    Derivative,
    Theorem3,
    Lemma1,
    Odes,
    Pdes,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, default_value_t = 12)]
    pub nmax: usize,
    #[arg(long)]
    pub order: Option<usize>,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true, default_value = "-1")]
    pub xmin: String,
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    pub xmax: String,
    #[arg(long, default_value_t = 201)]
    pub samples: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct NumbersArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, default_value_t = 10)]
    pub order: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

fn parse_convention(s: &str) -> Result<EulerConvention, String> {
    s.parse()
}
