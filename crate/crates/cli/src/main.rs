mod commands;
mod error;
mod files;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

/// Bell violation and distillability analysis for N-qubit states.
#[derive(Parser)]
#[command(name = "belldist", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named state family to a state file.
    Generate {
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Mixing weight of the GHZ projector (noisy-ghz only).
        #[arg(long)]
        p: Option<f64>,
        /// Seed for the random product state.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        label: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Optimize the Bell value and report what it certifies.
    Analyze {
        #[command(flatten)]
        optimizer: Optimizer,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Measure one qubit and report the conditional state and value.
    Reduce {
        #[command(flatten)]
        optimizer: Optimizer,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        qubit: usize,
        #[arg(long)]
        out: PathBuf,
        /// Also write the conditional state as a standalone state file.
        #[arg(long)]
        state_out: Option<PathBuf>,
    },
    /// Partial-transpose spectrum of every bipartition.
    Scan {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct Optimizer {
    /// `mbk`, or the path of a sign-function file.
    #[arg(long, default_value = "mbk")]
    family: String,
    #[arg(long, default_value_t = 32)]
    restarts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Ghz,
    NoisyGhz,
    GhzPadded,
    Dur,
    Product,
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Generate {
            kind,
            n,
            p,
            seed,
            label,
            out,
        } => commands::generate(kind, n, p, seed, label, &out),
        Command::Analyze {
            optimizer,
            input,
            out,
        } => commands::analyze(&input, &optimizer, &out),
        Command::Reduce {
            optimizer,
            input,
            qubit,
            out,
            state_out,
        } => commands::reduce(&input, qubit, &optimizer, &out, state_out.as_deref()),
        Command::Scan { input, out } => commands::scan(&input, &out),
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("belldist: {e}");
            e.exit_code()
        }
    }
}
