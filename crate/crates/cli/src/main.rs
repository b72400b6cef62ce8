//! `sgraph`: signed graphs, their Mycielskians, colorings and matrices from
//! the command line.
//!
//! Every subcommand reads the text edge-list format and writes a
//! human-readable table, or a single JSON document with `--json`.
//! Exit codes: 0 success, 1 failed audit claim, 2 input error,
//! 3 precondition violation, 4 search budget exhausted.

mod audit;
mod commands;
mod error;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "sgraph",
    version,
    about = "Signed graphs and their Mycielskians"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, size, sign counts, degree table, connectivity, triangle-freeness.
    Info(FileArgs),
    /// Build the Mycielskian (or, with --balanced, the balanced Mycielskian).
    Mycielskian(MycielskianArgs),
    /// Balance certificate: Harary bipartition and switching, or a negative cycle.
    Balance(FileArgs),
    /// Exact signed chromatic number.
    Chromatic(ChromaticArgs),
    /// Print a matrix of the graph or of its Mycielskian.
    Matrix(MatrixArgs),
    /// Rank and inertia of a symmetric matrix of the graph or its Mycielskian.
    Inertia(InertiaArgs),
    /// Check the Mycielskian identities on one or more inputs.
    Audit(AuditArgs),
    /// Write a generated instance in the edge-list format.
    Generate(GenerateArgs),
}

#[derive(Args)]
pub struct FileArgs {
    /// Input edge-list file.
    pub file: PathBuf,
    /// Emit a single JSON document.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args)]
pub struct MycielskianArgs {
    #[command(flatten)]
    pub input: FileArgs,
    /// Build M_B: root edges signed by a switching to all-positive.
    #[arg(long)]
    pub balanced: bool,
    /// Switching function for --balanced, e.g. `-1,+1,-1,-1` (default: the
    /// certifier's choice).
    #[arg(long, requires = "balanced", allow_hyphen_values = true)]
    pub switching: Option<String>,
    /// Output edge-list file; a labeling sidecar is written to
    /// `<out>.labeling.json`.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct ChromaticArgs {
    #[command(flatten)]
    pub input: FileArgs,
    /// Also print the witness coloring in vertex order.
    #[arg(long)]
    pub certificate: bool,
    /// Search-node budget; on exhaustion a lower bound is reported.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Split the search on the first vertex's colors across threads.
    #[arg(long, conflicts_with = "budget")]
    pub parallel: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    Adjacency,
    Incidence,
    Laplacian,
    Degree,
    /// Adjacency of the negative join with one extra vertex.
    Negjoin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Input,
    Mycielskian,
}

#[derive(Args)]
pub struct MatrixArgs {
    #[command(flatten)]
    pub input: FileArgs,
    #[arg(long, value_enum, default_value = "adjacency")]
    pub kind: MatrixKind,
    #[arg(long, value_enum, default_value = "input")]
    pub of: Target,
}

#[derive(Args)]
pub struct InertiaArgs {
    #[command(flatten)]
    pub input: FileArgs,
    #[arg(long, value_enum, default_value = "adjacency")]
    pub kind: MatrixKind,
    #[arg(long, value_enum, default_value = "input")]
    pub of: Target,
}

#[derive(Args)]
pub struct AuditArgs {
    /// Input edge-list files.
    #[arg(required = true)]
    pub files: Vec<PathBuf>,
    #[arg(long)]
    pub json: bool,
    /// Threads used across files.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Search-node budget per chromatic computation.
    #[arg(long, default_value_t = 5_000_000)]
    pub budget: u64,
    /// Corrupt the congruence factor before checking it (negative control).
    #[arg(long)]
    pub inject_fault: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenerateKind {
    Path,
    Cycle,
    Star,
    Complete,
    Random,
    /// Level of the chromatic tower `K1, K2-, M_B(K2-), …`.
    Tower,
}

#[derive(Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub kind: GenerateKind,
    /// Edge signs for path/cycle/star, e.g. `-+++`.
    #[arg(long, allow_hyphen_values = true)]
    pub pattern: Option<String>,
    /// Vertex count for complete/random.
    #[arg(short, long)]
    pub p: Option<usize>,
    /// Edge sign for complete: `+1` or `-1`.
    #[arg(long, default_value = "+1", allow_hyphen_values = true)]
    pub sign: String,
    #[arg(long, default_value_t = 0.5)]
    pub edge_prob: f64,
    #[arg(long, default_value_t = 0.5)]
    pub neg_prob: f64,
    /// Tower level (1-based).
    #[arg(long)]
    pub level: Option<usize>,
    #[arg(long, env = "SG_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Info(a) => commands::info(&a),
        Command::Mycielskian(a) => commands::mycielskian(&a),
        Command::Balance(a) => commands::balance(&a),
        Command::Chromatic(a) => commands::chromatic(&a),
        Command::Matrix(a) => commands::matrix(&a),
        Command::Inertia(a) => commands::inertia(&a),
        Command::Audit(a) => audit::run(&a),
        Command::Generate(a) => commands::generate(&a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sgraph: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
