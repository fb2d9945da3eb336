use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "coalesce", version, about = "Graph k-coalescences: spectra, invariants, indices and formula checks")]
pub struct Cli {
    /// Indent the JSON report.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Compact JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,
    /// Print a short summary to stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a named graph and write its edge list.
    Gen(GenArgs),
    /// Merge a clique of one graph with a clique of another.
    Coalesce(CoalesceArgs),
    /// Structural invariants of a graph.
    Analyze(AnalyzeArgs),
    /// Numeric A_α spectrum and energy.
    Spectrum(AlphaInput),
    /// Exact A_α characteristic polynomial.
    Charpoly(AlphaInput),
    /// Topological indices W, WW, F, M1, NK.
    Indices(InputArgs),
    /// Compare closed-form statements against direct computation.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Edge-list file, or `-` for stdin.
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct AlphaInput {
    #[command(flatten)]
    pub input: InputArgs,
    /// Rational weight `p/q`; repeat for several values.
    #[arg(long, default_value = "0")]
    pub alpha: Vec<String>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// complete, cycle, path, star, lollipop, dumbbell, dandelion or kite.
    #[arg(long)]
    pub family: String,
    /// Comma-separated family parameters.
    #[arg(long)]
    pub params: String,
    /// Write the edge list here (`-` for stdout) instead of a JSON report.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long, value_name = "FILE")]
    pub g1: PathBuf,
    /// Comma-separated clique vertices of the first graph.
    #[arg(long)]
    pub q1: String,
    #[arg(long, value_name = "FILE")]
    pub g2: PathBuf,
    #[arg(long)]
    pub q2: String,
}

#[derive(Debug, Args)]
pub struct CoalesceArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    /// Largest order for exponential searches.
    #[arg(long, env = "COALESCE_LIMIT")]
    pub limit: Option<usize>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub limit: LimitArgs,
}

#[derive(Debug, Args)]
pub struct OptionalPair {
    #[arg(long, value_name = "FILE", requires_all = ["q1", "g2", "q2"])]
    pub g1: Option<PathBuf>,
    #[arg(long)]
    pub q1: Option<String>,
    #[arg(long, value_name = "FILE")]
    pub g2: Option<PathBuf>,
    #[arg(long)]
    pub q2: Option<String>,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Named ranges, e.g. `m=2..10;n=2..10;k=1..3`.
    #[arg(long)]
    pub grid: Option<String>,
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub k: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Structural propositions for one pair, or a sweep over small families.
    Structure {
        #[command(flatten)]
        pair: OptionalPair,
        /// Clique sizes for the sweep.
        #[arg(long, default_value = "1..3")]
        k: String,
        #[command(flatten)]
        limit: LimitArgs,
    },
    /// Characteristic-polynomial decomposition for one pair or a random grid.
    Decomposition {
        #[command(flatten)]
        pair: OptionalPair,
        #[arg(long, default_value = "0")]
        alpha: Vec<String>,
        /// `principal` or `induced` reading of A_α(G \ Q).
        #[arg(long, default_value = "principal")]
        convention: String,
        /// Check the adjacency corollary instead (α is ignored).
        #[arg(long)]
        corollary: bool,
        /// Grid of `k` and `n` for random pairs.
        #[arg(long, default_value = "k=2..3;n=4..8")]
        grid: String,
        /// Random pairs per grid cell.
        #[arg(long, default_value_t = 2)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Closed-form polynomial and spectrum of K_m ∘k K_n.
    CompleteForms {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        alpha: Vec<String>,
    },
    /// Printed energy formulas for K_m ∘k K_n.
    EnergyCorollaries {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        alpha: Vec<String>,
        /// general, k1, k2, mm_k, mm_1 or mm_2; all applicable when omitted.
        #[arg(long)]
        variant: Vec<String>,
    },
    /// Family index closed forms against brute force.
    IndexForms {
        /// lollipop, dumbbell, dandelion or kite; all when omitted.
        #[arg(long)]
        family: Vec<String>,
        #[arg(long)]
        grid: Option<String>,
        /// W, WW, F, M1 or NK; all when omitted.
        #[arg(long)]
        index: Vec<String>,
    },
}
