//! `blowup`: spectra of blow-up graphs from the command line.
//!
//! Exit status: 0 success, 1 internal failure, 2 bad input, 3 verification
//! failure.

mod commands;
mod input;

use std::process::ExitCode;

use blowup_core::DEFAULT_VERIFY_TOL;
use clap::{Args, Parser, Subcommand, ValueEnum};

use input::InputArgs;

#[derive(Debug, Parser)]
#[command(name = "blowup", version, about = "Spectra of blow-up graphs and their complements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Oracle spectrum of a matrix of the input graph itself.
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputFormat,
    },
    /// Closed-form spectrum of a matrix of the blow-up G^(t).
    Blowup {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short = 't', long = "order", default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        t: u64,
        /// Zero tolerance for the complement Laplacian.
        #[arg(long, default_value_t = DEFAULT_VERIFY_TOL, value_parser = positive_f64)]
        tol: f64,
        /// Also print the blow-up in graph6 (when it has at most 62 vertices).
        #[arg(long)]
        emit_graph: bool,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputFormat,
    },
    /// Check every closed form against the eigensolver on G^(t).
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short = 't', long = "order", default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        t: u64,
        #[arg(long, default_value_t = DEFAULT_VERIFY_TOL, value_parser = positive_f64)]
        tol: f64,
        /// Verify this many random Erdős–Rényi graphs instead of an input graph.
        #[arg(long, value_name = "COUNT", conflicts_with_all = ["input", "graph"])]
        random: Option<usize>,
        /// Seed for --random.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputFormat,
    },
}

#[derive(Debug, Clone, Args)]
struct FamilyArgs {
    #[arg(long, value_enum, default_value = "all")]
    family: FamilySelector,
    /// Use the complement graph.
    #[arg(long)]
    complement: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilySelector {
    Adjacency,
    Laplacian,
    Signless,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Internal(String),
}

impl From<blowup_core::Error> for CliError {
    fn from(e: blowup_core::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

/// What a successful run concluded.
pub enum Outcome {
    Success,
    VerificationFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Spectrum { input, family, output } => commands::cmd_spectrum(&input, &family, output),
        Command::Blowup { input, family, t, tol, emit_graph, output } => {
            commands::cmd_blowup(&input, &family, t as usize, tol, emit_graph, output)
        }
        Command::Verify { input, t, tol, random, seed, output } => {
            commands::cmd_verify(&input, t as usize, tol, random, seed, output)
        }
    };
    match result {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(3),
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
