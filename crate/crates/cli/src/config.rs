use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dualspace::embedded::{DEFAULT_RETRIES, DEFAULT_SEED};

#[derive(Debug, Parser)]
#[command(name = "dualspace", version, about = "Dual spaces, local Hilbert data and embedded points of polynomial ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub config: RunConfig,
}

/// One subcommand with all of its settings; embedded verbatim in every
/// report.
#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum RunConfig {
    /// Truncated dual space D^k at the point
    Dual(DualArgs),
    /// Full dual space of a 0-dimensional ideal
    Fulldual(FullArgs),
    /// Eliminating dual space E^d[I, A]
    Elimdual(ElimArgs),
    /// Dual of the colon ideal I:<A> through x·E^{d+1}
    ColonElim(ColonArgs),
    /// Local Hilbert function, regularity index and multiplicity
    Hilbert(HilbertArgs),
    /// Standard monomials up to degree k
    Staircase(DualArgs),
    /// Membership of a polynomial in a homogeneous ideal
    Member(MemberArgs),
    /// Whether the point is an embedded component of the curve
    Embedded(EmbeddedArgs),
}

impl RunConfig {
    pub fn name(&self) -> &'static str {
        match self {
            RunConfig::Dual(_) => "dual",
            RunConfig::Fulldual(_) => "fulldual",
            RunConfig::Elimdual(_) => "elimdual",
            RunConfig::ColonElim(_) => "colon-elim",
            RunConfig::Hilbert(_) => "hilbert",
            RunConfig::Staircase(_) => "staircase",
            RunConfig::Member(_) => "member",
            RunConfig::Embedded(_) => "embedded",
        }
    }

    pub fn common(&self) -> &Common {
        match self {
            RunConfig::Dual(a) | RunConfig::Staircase(a) => &a.common,
            RunConfig::Fulldual(a) => &a.common,
            RunConfig::Elimdual(a) => &a.common,
            RunConfig::ColonElim(a) => &a.common,
            RunConfig::Hilbert(a) => &a.common,
            RunConfig::Member(a) => &a.common,
            RunConfig::Embedded(a) => &a.common,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModeArg {
    Exact,
    Complex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Direct,
    Completion,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Common {
    /// System file; standard input when absent or "-"
    pub input: Option<PathBuf>,
    /// Relative singular-value tolerance for rank decisions
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    /// Relative tolerance for constant terms after moving the point to the origin
    #[arg(long = "point-tol", default_value_t = 1e-8)]
    pub point_tol: f64,
    /// Coefficient field; defaults to the file's mode line, else inferred
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// Include full bases in the report
    #[arg(long)]
    pub verbose: bool,
    /// Add a Macaulay2 snippet of the computed basis
    #[arg(long)]
    pub m2: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DualArgs {
    /// Truncation degree
    #[arg(long)]
    pub k: u32,
    #[arg(long, value_enum, default_value_t = Method::Completion)]
    pub method: Method,
    #[command(flatten)]
    #[serde(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct FullArgs {
    /// Largest degree examined before giving up
    #[arg(long = "max-degree", default_value_t = 20)]
    pub max_degree: u32,
    #[command(flatten)]
    #[serde(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ElimArgs {
    /// Bound on the order in the eliminated variables
    #[arg(long)]
    pub d: u32,
    /// Eliminated variables, comma separated
    #[arg(long = "A", value_delimiter = ',', required = true)]
    #[serde(rename = "A")]
    pub a: Vec<String>,
    /// Stabilization cap (default d + 2·sum of generator degrees)
    #[arg(long = "max-degree")]
    pub max_degree: Option<u32>,
    #[command(flatten)]
    #[serde(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ColonArgs {
    /// Bound on the order in the eliminated variables of the result
    #[arg(long)]
    pub d: u32,
    /// Variables of the colon ideal, comma separated
    #[arg(long = "A", value_delimiter = ',', required = true)]
    #[serde(rename = "A")]
    pub a: Vec<String>,
    /// Generators of a known colon ideal I:<A>, separated by ';'
    #[arg(long)]
    pub colon: Option<String>,
    /// Stabilization cap for the eliminating duals
    #[arg(long = "max-degree")]
    pub max_degree: Option<u32>,
    #[command(flatten)]
    #[serde(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct HilbertArgs {
    /// Report H(0..=kmax) regardless of stabilization
    #[arg(long)]
    pub kmax: Option<u32>,
    #[command(flatten)]
    #[serde(flatten)]
    pub stab: Stabilization,
    #[command(flatten)]
    #[serde(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Stabilization {
    /// Consecutive equal Hilbert values taken as stable (default max degree + 2)
    #[arg(long)]
    pub window: Option<usize>,
    /// Largest degree examined for stabilization
    #[arg(long = "k-cap")]
    pub k_cap: Option<u32>,
    /// Known regularity index
    #[arg(long = "assume-rho")]
    pub assume_rho: Option<usize>,
    /// Known multiplicity
    #[arg(long = "assume-mu")]
    pub assume_mu: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct MemberArgs {
    /// The polynomial to test
    #[arg(long)]
    pub poly: String,
    #[command(flatten)]
    #[serde(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EmbeddedArgs {
    /// First seed of the random change of coordinates
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Extra attempts when the change is not in regular position
    #[arg(long, default_value_t = DEFAULT_RETRIES)]
    pub retries: usize,
    /// Skip the random change and use the given coordinates
    #[arg(long = "no-change")]
    pub no_change: bool,
    /// Stabilization cap for the eliminating duals
    #[arg(long = "max-degree")]
    pub max_degree: Option<u32>,
    #[command(flatten)]
    #[serde(flatten)]
    pub stab: Stabilization,
    #[command(flatten)]
    #[serde(flatten)]
    pub common: Common,
}
