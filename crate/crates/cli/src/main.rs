//! `luorbit` — classify local-unitary orbits of N×N bipartite pure states.
//!
//! Subcommands:
//!   schmidt     Schmidt vector, degeneracy pattern, and class of a state
//!   orbit       analytic vs numerical orbit dimension, topology, Gram report
//!   table       the Weyl-chamber stratum table for a given N
//!   monotones   τ vector and entanglement entropies
//!   nielsen     LOCC convertibility verdict for a pair of states
//!   experiment  bistochastic trace experiment on a density matrix
//!
//! Exit codes: 0 success, 1 invariant violation, 2 malformed input,
//! 3 internal cross-check mismatch.

mod commands;
mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};

use luorbit_core::Error as CoreError;

#[derive(Parser)]
#[command(
    name = "luorbit",
    version,
    about = "Local-unitary orbit classification for bipartite pure states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Args)]
struct CommonOpts {
    /// Input state file (JSON); omit to generate a random state from --n/--seed
    #[arg(long = "in", value_name = "PATH")]
    input: Option<String>,
    /// Local dimension N for generated states
    #[arg(long)]
    n: Option<usize>,
    /// Seed for every random draw
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Schmidt coefficients below this count as vanishing
    #[arg(long, default_value_t = 1e-9)]
    zero_tol: f64,
    /// Coefficients closer than this are grouped as degenerate
    #[arg(long, default_value_t = 1e-9)]
    group_tol: f64,
    /// Relative tolerance for the numerical Gram rank
    #[arg(long, default_value_t = 1e-8)]
    rank_tol: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Schmidt decomposition and degeneracy classification of a state
    Schmidt {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Orbit dimension (closed formula and Gram rank), topology, block report
    Orbit {
        #[command(flatten)]
        common: CommonOpts,
        /// Also analyze the Werner mixture (1−α)/N²·I + α|ψ⟩⟨ψ|
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Weyl-chamber stratum table; N ∈ {2,3,4} is checked against the
    /// published data
    Table {
        /// Local dimension N
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Entanglement monotones and entropies of a state
    Monotones {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Nielsen convertibility between two states
    Nielsen {
        /// Source state |ψ⟩ (JSON file)
        psi: String,
        /// Target state |φ⟩ (JSON file)
        phi: String,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Bistochastic trace experiment: t_k(G) under random local mixtures
    Experiment {
        #[command(flatten)]
        common: CommonOpts,
        /// Number of random mixtures to test
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Number of unitary pairs per mixture
        #[arg(long, default_value_t = 2)]
        mix_size: usize,
    },
}

/// Failure carrying its process exit code.
pub enum Failure {
    /// Exit 1: a state or matrix violates its invariants.
    Invariant(String),
    /// Exit 2: unreadable or malformed input / configuration.
    Input(String),
    /// Exit 3: an internal cross-check disagreed (analytic vs numerical).
    CrossCheck(String),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Invariant(_) => 1,
            Failure::Input(_) => 2,
            Failure::CrossCheck(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Invariant(m) | Failure::Input(m) | Failure::CrossCheck(m) => m,
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::NotNormalized { .. }
            | CoreError::BadTrace(_)
            | CoreError::NotPositiveSemidefinite(_)
            | CoreError::NotHermitian { .. }
            | CoreError::NotSymmetric { .. }
            | CoreError::NotUnitary { .. }
            | CoreError::NegativeCoefficient(_)
            | CoreError::NonFinite => Failure::Invariant(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Schmidt { common } => commands::schmidt(&common),
        Command::Orbit { common, alpha } => commands::orbit(&common, alpha),
        Command::Table { n, format } => commands::table(n, format),
        Command::Monotones { common } => commands::monotones(&common),
        Command::Nielsen { psi, phi, format } => commands::nielsen(&psi, &phi, format),
        Command::Experiment {
            common,
            trials,
            mix_size,
        } => commands::experiment(&common, trials, mix_size),
    };
    if let Err(failure) = result {
        eprintln!("error: {}", failure.message());
        std::process::exit(failure.exit_code());
    }
}
