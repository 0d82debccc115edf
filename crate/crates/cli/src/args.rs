use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use domlab::graph::GraphFormat;

#[derive(Debug, Parser)]
#[command(name = "domlab", version, about = "Exact domination solvers for sparse graphs")]
pub struct Cli {
    /// Worker threads for matrix products; 0 uses every core.
    #[arg(long, global = true, env = "DOMLAB_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide one instance and print the result.
    Solve(SolveArgs),
    /// Write a reduction instance and its JSON sidecar.
    Generate(GenerateArgs),
    /// Check a stored result or a generated instance.
    Verify(VerifyArgs),
    /// Sweep random hub graphs and print one row per run.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProblemKind {
    Multidom,
    Tupledom,
    DomClique,
    DomIndepset,
    DomMatching,
    Pattern,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Fast,
    Brute,
    Pipeline,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Fast => "fast",
            Algo::Brute => "brute",
            Algo::Pipeline => "pipeline",
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub problem: ProblemKind,
    #[arg(long)]
    pub k: usize,
    /// Domination multiplicity, multidom and tupledom only.
    #[arg(long)]
    pub r: Option<usize>,
    /// Pattern JSON file, `{"k": 3, "edges": [[0, 1]]}`.
    #[arg(long)]
    pub pattern: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "fast")]
    pub algo: Algo,
    /// Accept any solution size from 1 to k; the smallest is reported.
    #[arg(long)]
    pub at_most_k: bool,
    /// Grouping ratio `p/q` for the pipeline clique search.
    #[arg(long)]
    pub gamma: Option<String>,
    #[arg(long, default_value = "edgelist")]
    pub format: GraphFormat,
    /// Seed echoed into the result; solvers are deterministic.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub json: bool,
    /// Report elapsed time as zero so outputs are reproducible.
    #[arg(long)]
    pub no_timing: bool,
    pub graph: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReductionKind {
    OvMultidom,
    OvHdom,
    OvMatching,
    IsMultidom,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub reduction: ReductionKind,
    /// Number of OV sets, or the target solution size for is-multidom.
    #[arg(long)]
    pub k: usize,
    /// Required zeros per coordinate for ov-multidom.
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    /// OV dimension, or the part multiplier for is-multidom.
    #[arg(long)]
    pub d: Option<usize>,
    /// Vectors per OV set, or vertices per source part, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub sizes: Vec<usize>,
    /// Probability that an OV bit is zero.
    #[arg(long, default_value_t = 0.5)]
    pub zero_prob: f64,
    /// Edge probability between source parts for is-multidom.
    #[arg(long, default_value_t = 0.5)]
    pub edge_prob: f64,
    /// Ratio `p/q`, coprime with `0 < p < q`, for is-multidom.
    #[arg(long, default_value = "1/2")]
    pub gamma: String,
    /// Pattern JSON file for ov-hdom; defaults to the path on k vertices.
    #[arg(long)]
    pub pattern: Option<PathBuf>,
    /// Source instance JSON instead of a random one.
    #[arg(long)]
    pub source: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output prefix; writes PREFIX.txt and PREFIX.json.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Graph file; defaults to the sidecar path with a `.txt` extension.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Result JSON written by `solve --json`.
    #[arg(long, conflicts_with = "sidecar", required_unless_present = "sidecar")]
    pub result: Option<PathBuf>,
    /// Sidecar JSON written by `generate`.
    #[arg(long)]
    pub sidecar: Option<PathBuf>,
    #[arg(long, default_value = "edgelist")]
    pub format: GraphFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BenchFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "50,100,200")]
    pub n: Vec<usize>,
    /// Edge-to-vertex ratios m/n; also the number of heavy vertices.
    #[arg(long, value_delimiter = ',', default_value = "2,4")]
    pub ratio: Vec<usize>,
    #[arg(long, default_value_t = 4)]
    pub k: usize,
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "fast,brute")]
    pub algos: Vec<Algo>,
    #[arg(long, default_value_t = 1)]
    pub reps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Skip brute runs with more than this many k-subsets.
    #[arg(long, default_value_t = 2_000_000)]
    pub brute_cap: u128,
    #[arg(long)]
    pub no_timing: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: BenchFormat,
}
