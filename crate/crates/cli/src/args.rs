use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use metric_committee::engine::{CenterRule, CoveringRule, RepresentativeRule, TieBreakPolicy};
use metric_committee::DEFAULT_BUDGET;

#[derive(Debug, Parser)]
#[command(
    name = "metric-committee",
    version,
    about = "Fair committee selection in pseudometric spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Instance file (JSON, matrix or points form).
    #[arg(long, global = true)]
    pub instance: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Work budget in search nodes; `opt --axioms` reads it as a cap on
    /// enumerated committees.
    #[arg(long, global = true, env = "METRIC_COMMITTEE_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Run algorithms through the duplication reduction when k does not
    /// divide n (the default).
    #[arg(long, global = true, overrides_with = "strict_divisible")]
    pub allow_indivisible: bool,
    /// Reject instances where k does not divide n.
    #[arg(long, global = true, overrides_with = "allow_indivisible")]
    pub strict_divisible: bool,
    #[arg(long, global = true, default_value = "lowest-index")]
    pub tie_break_center: CenterRule,
    #[arg(long, global = true, default_value = "ascending-index")]
    pub tie_break_covering: CoveringRule,
    #[arg(long, global = true, default_value = "closest-to-opt-then-index")]
    pub tie_break_representative: RepresentativeRule,
    /// Co-location amendment for min-diam and all-centers.
    #[arg(long, global = true)]
    pub colocated_first: bool,
}

impl GlobalArgs {
    pub fn policy(&self) -> TieBreakPolicy {
        TieBreakPolicy {
            center_rule: self.tie_break_center,
            covering_rule: self.tie_break_covering,
            representative_rule: self.tie_break_representative,
            colocated_first: self.colocated_first,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a selection algorithm.
    Select(SelectArgs),
    /// Audit a committee against the fairness axioms.
    Audit(AuditArgs),
    /// Cheapest committee, optionally subject to exact axioms.
    Opt(OptArgs),
    /// Write a generated instance.
    Generate(GenerateArgs),
    /// Worst-case guarantees over random instances.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct SelectArgs {
    /// min-diam, opt-guided, greedy-capture, all-centers or alpha-scaled.
    #[arg(long, default_value = "greedy-capture")]
    pub algorithm: String,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    /// Keep the last representative where greedy capture put it.
    #[arg(long)]
    pub no_relocate: bool,
    /// Also write the covering trace here, one JSON event per line.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// Committee file (`{"members": [..]}`).
    #[arg(long)]
    pub committee: PathBuf,
    /// Comma-separated list of prf, mjr, norp, point-norp, or `all`.
    #[arg(long, default_value = "all")]
    pub axioms: String,
    /// Audit PRF on this many random coalitions per size instead of
    /// exhaustively. The reported factor is then a lower bound.
    #[arg(long)]
    pub sample: Option<usize>,
    /// Count agents near any committee member towards NORP requirements.
    #[arg(long)]
    pub lax_norp: bool,
}

#[derive(Debug, Args)]
pub struct OptArgs {
    /// Restrict to committees satisfying these axioms exactly.
    #[arg(long)]
    pub axioms: Option<String>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub eps: Option<f64>,
    #[arg(long)]
    pub group_size: Option<usize>,
    #[arg(long)]
    pub spacing: Option<f64>,
    #[arg(long)]
    pub dim: Option<usize>,
    /// l2, l1 or linf.
    #[arg(long)]
    pub norm: Option<String>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    #[arg(long, default_value_t = 12)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    /// Comma-separated algorithm ids, or `all`.
    #[arg(long, default_value = "all")]
    pub algorithms: String,
    /// Factors for alpha-scaled.
    #[arg(long, value_delimiter = ',', default_value = "1,2,4")]
    pub alphas: Vec<f64>,
}
