use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lcreg_core::{FieldSpec, Suite};

#[derive(Debug, Parser)]
#[command(name = "lcreg", version, about = "Graded components of local cohomology of bigraded hypersurfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads
    #[arg(long, global = true, env = "LCREG_THREADS", default_value_t = 1,
          value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: u32,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function of H^n(R)_j and the H^{n-1} window
    Hilbert(Instance),
    /// Regularity and length of H^n(R)_j, first nonzero degree of H^{n-1}(R)_j
    Regularity(Instance),
    /// Ideals I_{j,u} of the initial module
    Initial(Instance),
    /// Betti numbers and multiplicity for (x1*y1+...+xn*yn)^r
    Betti(Family),
    /// Linear regularity bound over a range of j
    Bound(BoundArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Range {
    /// Single component degree
    #[arg(long, allow_hyphen_values = true, conflicts_with = "j_range")]
    pub j: Option<i64>,

    /// Inclusive range a..b
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    pub j_range: Option<(i64, i64)>,
}

impl Range {
    pub fn get(&self) -> Option<(i64, i64)> {
        self.j.map(|j| (j, j)).or(self.j_range)
    }
}

#[derive(Debug, Clone, Args)]
pub struct Instance {
    /// Bihomogeneous polynomial in x1..xm, y1..yn
    #[arg(long)]
    pub f: String,
    /// Number of x variables
    #[arg(long)]
    pub m: usize,
    /// Number of y variables
    #[arg(long)]
    pub n: usize,
    /// Use f^r
    #[arg(long, default_value_t = 1)]
    pub r: u32,
    #[command(flatten)]
    pub range: Range,
    /// rational or prime:<p>
    #[arg(long, default_value = "rational", value_parser = parse_field)]
    pub field: FieldSpec,
    /// Degree cap for the Hilbert function scan
    #[arg(long, default_value_t = lcreg_core::DEFAULT_CAP)]
    pub cap: u32,
    /// Include the presentation matrix in each result
    #[arg(long)]
    pub presentation: bool,
}

#[derive(Debug, Clone, Args)]
pub struct Family {
    /// Number of variables on each side
    #[arg(long)]
    pub n: usize,
    /// Power of the form
    #[arg(long, default_value_t = 1)]
    pub r: u32,
    #[command(flatten)]
    pub range: Range,
    /// rational or prime:<p>
    #[arg(long, default_value = "rational", value_parser = parse_field)]
    pub field: FieldSpec,
    /// Degree cap for the Hilbert function scan
    #[arg(long, default_value_t = lcreg_core::DEFAULT_CAP)]
    pub cap: u32,
}

#[derive(Debug, Clone, Args)]
pub struct BoundArgs {
    #[command(flatten)]
    pub instance: Instance,
    /// f is the generic form sum of x_beta y^beta
    #[arg(long)]
    pub generic: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// lefschetz, monotonicity, macaulay, prop31, betti, bounds or all
    #[arg(value_parser = parse_suite)]
    pub suite: Suite,
    /// Restrict to one n
    #[arg(long)]
    pub n: Option<usize>,
    /// Restrict to one power r
    #[arg(long)]
    pub r: Option<u32>,
    /// Override the suite's j range
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    pub j_range: Option<(i64, i64)>,
    /// Override the suite's field
    #[arg(long, value_parser = parse_field)]
    pub field: Option<FieldSpec>,
    #[arg(long, default_value_t = lcreg_core::DEFAULT_CAP)]
    pub cap: u32,
    /// Seed for the random multipliers
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of random multipliers
    #[arg(long)]
    pub count: Option<usize>,
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let a: i64 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: i64 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: lcreg_core::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: lcreg_core::Error| e.to_string())
}
