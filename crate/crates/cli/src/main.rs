use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod fetch;

/// Exact persistence diagrams of large graphs via k-core and
/// dominated-vertex reductions.
#[derive(Parser, Debug)]
#[command(name = "coralprune", version, about)]
struct Cli {
    /// Worker threads for sweeps and multi-dataset runs (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GraphInput {
    /// Edge list (`.gz` accepted).
    #[arg(long)]
    input: PathBuf,
    /// degree | coreness | constant:<v> | attr:<csv>
    #[arg(long, default_value = "degree")]
    filter: String,
    /// sub | super | power
    #[arg(long, default_value = "sub")]
    direction: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce a graph and write the reduced edge list, filter and report.
    Reduce {
        #[command(flatten)]
        graph: GraphInput,
        /// coral | prunit | combined
        #[arg(long, default_value = "prunit")]
        method: String,
        /// Core index; the result is the (k+1)-core.
        #[arg(long)]
        k: Option<usize>,
        /// Never prune either vertex of a pair with identical closed
        /// neighborhoods.
        #[arg(long)]
        skip_mutual: bool,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
    },
    /// Compute a persistence diagram.
    Pd {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, default_value_t = 1)]
        max_dim: usize,
        /// drop | keep
        #[arg(long, default_value = "drop")]
        zero_pairs: String,
        /// Power filtration steps (default: diameter).
        #[arg(long)]
        max_power: Option<usize>,
        /// Round filter values to multiples of this step instead of using
        /// every distinct value as a threshold.
        #[arg(long)]
        step: Option<f64>,
        /// `.csv` writes CSV, anything else JSON; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a reduction preserves diagrams; exits 1 on any failure.
    Verify(commands::VerifyArgs),
    /// Betti-number experiments.
    Experiment {
        #[command(subcommand)]
        which: commands::Experiment,
    },
    /// Reduction percentages and phase timings over several graphs.
    Bench(commands::BenchArgs),
    /// Download datasets listed in the manifest into the cache directory.
    Fetch(fetch::FetchArgs),
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags, unreadable or malformed input.
    Input(String),
    /// A verification found a mismatch.
    Verification(String),
}

impl From<coralprune::Error> for Failure {
    fn from(e: coralprune::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Reduce {
            graph,
            method,
            k,
            skip_mutual,
            out,
        } => commands::reduce(&graph, &method, k, skip_mutual, &out),
        Command::Pd {
            graph,
            max_dim,
            zero_pairs,
            max_power,
            step,
            out,
        } => commands::pd(
            &graph,
            max_dim,
            &zero_pairs,
            max_power,
            step,
            out.as_deref(),
        ),
        Command::Verify(args) => commands::verify(&args),
        Command::Experiment { which } => commands::experiment(&which),
        Command::Bench(args) => commands::bench(&args),
        Command::Fetch(args) => fetch::fetch(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
