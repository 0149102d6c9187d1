//! ffchain: generate adversarial posets, run First-Fit, classify against
//! the dichotomy, evaluate bounds, and verify the constructions.
//!
//! Exit codes: 0 on success, 1 when a verification assertion fails, 2 on
//! usage or schema errors.

mod bounds_cmd;
mod classify_cmd;
mod firstfit_cmd;
mod generate;
mod verify;

use clap::{Parser, Subcommand};
use std::path::PathBuf;

/// A command failure with its process exit code.
pub enum Failure {
    /// Bad usage, unreadable file, malformed JSON: exit 2.
    Schema(String),
    /// A verification assertion did not hold: exit 1.
    Assertion(String),
}

pub type CmdResult = Result<(), Failure>;

impl Failure {
    fn schema(e: impl std::fmt::Display) -> Failure {
        Failure::Schema(e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "ffchain", version, about = "First-Fit chain partitioning toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named poset or an adversarial bundle as JSON
    Generate {
        /// Family: chain, antichain, ladder, n, butterfly, stacked, skewed,
        /// reservoir, butterfly-lb
        family: String,
        /// Size parameter (elements, height, k, or q, where applicable)
        param: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run First-Fit on a poset file
    Firstfit {
        poset: PathBuf,
        /// JSON file {"order": [...]} fixing the presentation order
        #[arg(long, conflicts_with = "random_orders")]
        order_file: Option<PathBuf>,
        /// Run this many seeded random orders instead
        #[arg(long)]
        random_orders: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Record per-step color rejections
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for the largest wall (exact for small posets)
    Maxwall {
        poset: PathBuf,
        #[arg(long, default_value_t = ffchain::firstfit::DEFAULT_MAX_WALL_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a width-≤2 poset against the dichotomy
    Classify {
        poset: PathBuf,
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; nonzero exit on the first failed assertion
    Verify {
        /// Target: reservoir, butterfly, classifier, dilworth
        target: String,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        #[arg(long, default_value_t = 3)]
        q: u64,
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a bound formula
    Bounds {
        #[command(subcommand)]
        action: bounds_cmd::BoundsAction,
    },
    /// Export the Hasse diagram of a poset as DOT
    ExportDot {
        poset: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate { family, param, out } => generate::run(&family, param, out.as_deref()),
        Command::Firstfit {
            poset,
            order_file,
            random_orders,
            seed,
            trace,
            out,
        } => firstfit_cmd::run(
            &poset,
            order_file.as_deref(),
            random_orders,
            seed,
            trace,
            out.as_deref(),
        ),
        Command::Maxwall { poset, budget, out } => {
            firstfit_cmd::run_maxwall(&poset, budget, out.as_deref())
        }
        Command::Classify { poset, gamma, out } => {
            classify_cmd::run(&poset, gamma, out.as_deref())
        }
        Command::Verify {
            target,
            kmax,
            q,
            nmax,
            seed,
            out,
        } => verify::run(&target, kmax, q, nmax, seed, out.as_deref()),
        Command::Bounds { action } => bounds_cmd::run(action),
        Command::ExportDot { poset, out } => generate::run_export_dot(&poset, out.as_deref()),
    };
    match result {
        Ok(()) => {}
        Err(Failure::Assertion(msg)) => {
            eprintln!("verification failed: {msg}");
            std::process::exit(1);
        }
        Err(Failure::Schema(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}

/// Writes to the file when given, otherwise to stdout. A closed stdout
/// (e.g. piping into head) is not an error.
pub fn emit(out: Option<&std::path::Path>, content: &str) -> CmdResult {
    use std::io::Write;
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| Failure::Schema(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{content}") {
                Ok(()) => Ok(()),
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                Err(e) => Err(Failure::Schema(format!("cannot write to stdout: {e}"))),
            }
        }
    }
}

pub fn load_poset(path: &std::path::Path) -> Result<ffchain::Poset, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Schema(format!("cannot read {}: {e}", path.display())))?;
    ffchain::io::poset_from_json(&text).map_err(Failure::schema)
}
