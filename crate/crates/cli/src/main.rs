//! `sl2q`: normal forms, centre checks and representations from the shell.
//!
//! Exit codes: 0 success, 1 a check failed, 2 parse or format error,
//! 3 invalid order `n`, 4 constraint violation.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Seed for random parameter draws when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 20_250_101;

#[derive(Parser, Debug)]
#[command(
    name = "sl2q",
    version,
    about = "Exact toolkit for sl(2)_q at roots of unity"
)]
pub struct Cli {
    /// Multiplicative order of q (n >= 3).
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Algebra: B, F (C^2 - lambda^2 C2p = 1) or A (C = 1).
    #[arg(long, global = true, default_value = "B")]
    pub algebra: String,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for random parameter draws.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal form of an expression in X0, Xp, Xm, C, C2p, q, lambda.
    Nf { expr: String },
    /// Check the centre: centrality, the product recursion and the relation
    /// between X-^l X+^l and the other central elements.
    CentreCheck,
    /// Build a representation and print it as JSON.
    RepBuild {
        #[arg(long)]
        family: String,
        /// JSON params file ("-" for stdin); without it parameters are drawn
        /// at random from --seed.
        #[arg(long)]
        params: Option<String>,
    },
    /// Verify a representation JSON file ("-" for stdin).
    RepVerify { file: String },
    /// List the families of irreducible representations.
    Classify,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn parse(m: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: m.into(),
        }
    }
    pub fn order(m: impl Into<String>) -> Failure {
        Failure {
            code: 3,
            message: m.into(),
        }
    }
    pub fn constraint(m: impl Into<String>) -> Failure {
        Failure {
            code: 4,
            message: m.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
