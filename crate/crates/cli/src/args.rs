use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "hypercolor",
    version,
    about = "Conflict and list coloring of uniform hypergraphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a hypergraph in the text format.
    Gen(GenArgs),
    /// Single conflict coloring.
    #[command(subcommand)]
    Conflict(ConflictCommand),
    /// List coloring with random palettes.
    #[command(subcommand)]
    Palette(PaletteCommand),
    /// Seeded Monte Carlo experiments writing CSV.
    #[command(subcommand)]
    Scan(ScanCommand),
}

/// Flags shared by every randomized command.
#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Master seed; all randomness derives from it.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Nominal per-trial timeout, converted to a deterministic node budget.
    #[arg(long = "timeout-ms", default_value_t = 5000)]
    pub timeout_ms: u64,
    /// Output path (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads (0 = all cores). Never changes results.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum GenFamily {
    CompleteUniform,
    CompleteRPartite,
    DisjointCliques,
    RandomLinear,
    SequentialDegenerate,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub family: GenFamily,
    /// Vertex count (complete-uniform, random-linear, sequential-degenerate).
    #[arg(long, short)]
    pub n: Option<usize>,
    /// Uniformity.
    #[arg(long, short, default_value_t = 2)]
    pub r: usize,
    /// Part size (complete-r-partite).
    #[arg(long)]
    pub part_size: Option<usize>,
    /// Number of cliques (disjoint-cliques).
    #[arg(long)]
    pub cliques: Option<usize>,
    /// List size determining the clique order (disjoint-cliques).
    #[arg(long, short)]
    pub k: Option<usize>,
    /// Maximum degree (random-linear).
    #[arg(long)]
    pub delta: Option<usize>,
    /// Back degree per vertex (sequential-degenerate).
    #[arg(long, short)]
    pub d: Option<usize>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Subcommand, Debug)]
pub enum ConflictCommand {
    /// Decide one local k-partition (sampled from --k/--seed unless given).
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, conflicts_with = "k")]
        partition: Option<PathBuf>,
        #[arg(long, short, required_unless_present = "partition")]
        k: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Estimate p(H, k) by Monte Carlo.
    Estimate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, short)]
        k: u32,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Family label written to the CSV row.
        #[arg(long, default_value = "file")]
        family: String,
        #[command(flatten)]
        common: Common,
    },
    /// Exhaustive single conflict chromatic number.
    Chi {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 4)]
        k_max: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Exact p(H, k) by double enumeration.
    ExactP {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, short)]
        k: u32,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand, Debug)]
pub enum PaletteCommand {
    /// Sample a random (k, sigma)-list assignment.
    Assign {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, short)]
        k: usize,
        #[arg(long)]
        sigma: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Bad-color pruning report as CSV.
    Prune {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
        /// Also write the pruned lists here.
        #[arg(long)]
        pruned_out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Decide L-colorability by backtracking.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Moser-Tardos resampling.
    Lll {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        /// Resampling budget (default 10 per edge).
        #[arg(long)]
        max_resamples: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
}

/// Grid and run flags shared by the scans.
#[derive(Args, Debug, Clone)]
pub struct ScanCommon {
    /// Vertex counts: comma list with inclusive ranges, e.g. `10,20..22`.
    #[arg(long, short)]
    pub n: String,
    #[arg(long, short, default_value_t = 2)]
    pub r: usize,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    /// Write 0 instead of the measured wall-clock time, for byte-identical
    /// reruns.
    #[arg(long)]
    pub no_elapsed: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ThresholdFamily {
    CompleteGraph,
    CompleteUniform,
}

#[derive(Subcommand, Debug)]
pub enum ScanCommand {
    /// p(H, k) on complete graphs or complete uniform hypergraphs.
    Threshold {
        #[arg(long, value_enum, default_value = "complete-graph")]
        family: ThresholdFamily,
        /// Palette sizes, e.g. `2..6`.
        #[arg(long, short)]
        k: String,
        #[command(flatten)]
        scan: ScanCommon,
    },
    /// p(H, k) on sequentially built d-degenerate hypergraphs.
    Degeneracy {
        #[arg(long, short)]
        d: usize,
        /// Explicit palette sizes.
        #[arg(long, short)]
        k: Option<String>,
        /// Coefficients c in k = ceil(c (d / ln d)^(1/r)), comma separated.
        #[arg(long, short)]
        c: Option<String>,
        #[command(flatten)]
        scan: ScanCommon,
    },
    /// Same-list failure rate on disjoint cliques.
    Counterexample {
        #[arg(long, short)]
        k: u32,
        /// Universe size; otherwise from --c.
        #[arg(long)]
        sigma: Option<u32>,
        /// Palette constant in sigma = ceil(C Delta^(1/(r-1))).
        #[arg(long, short)]
        c: Option<f64>,
        #[command(flatten)]
        scan: ScanCommon,
    },
    /// List-coloring success rate on random linear hypergraphs.
    Sparsify {
        #[arg(long)]
        delta: usize,
        /// Palette constant C; must exceed (2^r e r)^(1/(r-1)).
        #[arg(long, short)]
        c: f64,
        /// Explicit list sizes; otherwise from --a.
        #[arg(long, short)]
        k: Option<String>,
        /// Constant A in k = ceil(A (ln n)^(1/r)).
        #[arg(long, short)]
        a: Option<f64>,
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
        /// Skip the pruning statistics.
        #[arg(long)]
        no_prune: bool,
        #[command(flatten)]
        scan: ScanCommon,
    },
}
