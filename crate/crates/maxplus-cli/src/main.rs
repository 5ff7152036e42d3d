//! `maxplus` — exact max-plus spectral analysis and switched-system
//! simulation from matrix and schedule files.

use maxplus_cli::commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use maxplus::spectral::DEFAULT_TRANSIENT_CAP;

#[derive(Parser)]
#[command(
    name = "maxplus",
    version,
    about = "Exact max-plus spectral analysis of switched discrete event systems",
    after_help = "Matrix files: '#' comments, a dimension line, then n rows of n tokens \
                  (eps, integers, p/q, decimals). Schedules: lines `phase <matrix> <length>`; \
                  matrices are named after their file stems. Exit codes: 0 ok, 1 analysis \
                  failure, 2 bad input."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalue, critical circuit, eigenvector, period, and transient of an irreducible matrix
    Eig {
        matrix: PathBuf,
        /// Emit a JSON object instead of text
        #[arg(long)]
        json: bool,
        /// Cap on the matrix powers examined for the period search
        #[arg(long, default_value_t = DEFAULT_TRANSIENT_CAP)]
        max_transient: usize,
    },
    /// Test strong connectivity of the precedence digraph
    Irreducible {
        matrix: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Analyze a switching schedule through its composed one-cycle matrix
    Switched {
        schedule: PathBuf,
        #[arg(required = true)]
        matrices: Vec<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_TRANSIENT_CAP)]
        max_transient: usize,
    },
    /// Simulate a schedule and cross-validate spectral vs empirical periodicity
    Simulate {
        schedule: PathBuf,
        #[arg(required = true)]
        matrices: Vec<PathBuf>,
        /// Steps to simulate; defaults to transient + three periods
        #[arg(long)]
        horizon: Option<usize>,
        /// Comma-separated initial state tokens (default: all zeros)
        #[arg(long)]
        x0: Option<String>,
        /// Write the trace as CSV to this path
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_TRANSIENT_CAP)]
        max_transient: usize,
    },
    /// Compare lambda(A ⊗ B) against lambda(A) + lambda(B)
    Probe {
        matrix_a: Option<PathBuf>,
        matrix_b: Option<PathBuf>,
        /// Probe seeded random finite-diagonal pairs instead of files
        #[arg(long)]
        random: bool,
        /// Matrix dimension for --random
        #[arg(long, default_value_t = 3)]
        size: usize,
        /// Number of random pairs for --random
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// RNG seed for --random
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

fn run(cli: Cli) -> commands::CmdResult {
    match cli.command {
        Command::Eig {
            matrix,
            json,
            max_transient,
        } => commands::cmd_eig(&matrix, json, max_transient),
        Command::Irreducible { matrix, json } => commands::cmd_irreducible(&matrix, json),
        Command::Switched {
            schedule,
            matrices,
            json,
            max_transient,
        } => commands::cmd_switched(&schedule, &matrices, json, max_transient),
        Command::Simulate {
            schedule,
            matrices,
            horizon,
            x0,
            csv,
            json,
            max_transient,
        } => commands::cmd_simulate(
            &schedule,
            &matrices,
            horizon,
            x0.as_deref(),
            csv.as_deref(),
            json,
            max_transient,
        ),
        Command::Probe {
            matrix_a,
            matrix_b,
            random,
            size,
            count,
            seed,
            json,
        } => {
            if random {
                commands::cmd_probe_random(size, count, seed, json)
            } else {
                match (matrix_a, matrix_b) {
                    (Some(a), Some(b)) => commands::cmd_probe_files(&a, &b, json),
                    _ => Err(commands::CliError::Input(
                        "probe needs two matrix files, or --random".to_string(),
                    )),
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((stdout, code)) => {
            print!("{stdout}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
