use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "arp", version, about = "Exact solver and complexity toolkit for the airplane refueling problem")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write an instance file.
    Generate(GenerateArgs),
    /// Find the best drop-out order.
    Solve(SolveArgs),
    /// Count sequential feasible orders.
    Count(CountArgs),
    /// Estimate the index m (exact) or m′ (heuristic) and the bounds at it.
    Estimate(EstimateArgs),
    /// Bound tables over the crossing family.
    Report(ReportArgs),
    /// Classify an instance by its v/c² and v/c orders.
    Classify(ClassifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output file; stdout when absent. Written atomically.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenerateKind {
    /// The 1000-airplane crossing family, first n rows.
    Table4,
    /// Random complete reverse order fleet.
    Cro,
    /// Random fleet with no class guarantee.
    General,
    /// k airplanes drawn from --input.
    Subset,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub kind: GenerateKind,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SolveMethod {
    Brute,
    Greedy,
    Sequential,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, short)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "sequential")]
    pub method: SolveMethod,
    /// Let brute force run past its size guard.
    #[arg(long)]
    pub force: bool,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, short)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EstimateMode {
    Exact,
    Heuristic,
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    #[arg(long, short)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "exact")]
    pub mode: EstimateMode,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportKind {
    /// n! against 2^(n-2) for n = 4, 6, 8, 10.
    Table2,
    /// Bounds at the exact index m along the family.
    Table5,
    /// Heuristic m′ and its bounds along the family.
    Table6,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(value_enum)]
    pub kind: ReportKind,
    /// Size of the crossing family the index is estimated on.
    #[arg(long, default_value_t = 1000)]
    pub n: usize,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, short)]
    pub input: PathBuf,
    #[command(flatten)]
    pub out: Output,
}
