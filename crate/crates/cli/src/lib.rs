//! Command-line front end: single values, the classic totient and
//! order-of-2 tables, power traces, coset partitions and verification sweeps.

pub mod commands;
pub mod report;

use clap::{Parser, Subcommand};
use residues::verify::{Suite, DEFAULT_SEED};

pub use report::{Format, Kind, ReportRow, Status, Value};

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const VIOLATION: i32 = 2;
    pub const INTERNAL: i32 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] residues::Error),
    #[error("output failed: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Domain(_) => exit::USAGE,
            CliError::Io(_) => exit::INTERNAL,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "residues",
    version,
    about = "Totients, orders and power residues modulo N"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for randomized verification suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// φ(n) and the factorization of n.
    Totient {
        n: u64,
        /// Also list the totatives.
        #[arg(long)]
        list: bool,
    },
    /// The residues in [0, n) coprime to n.
    Totatives { n: u64 },
    /// φ(n) for every n in [lo, hi].
    TablePhi { lo: u64, hi: u64 },
    /// φ(N), the order of 2 and the ratio φ/ν for odd N in [lo, hi].
    TableOrd2 { lo: u64, hi: u64 },
    /// Powers of x modulo N up to the first return to 1.
    Trace {
        #[arg(allow_negative_numbers = true)]
        x: i128,
        n: u64,
    },
    /// Cosets of the power residues of x among the totatives of N.
    Cosets {
        #[arg(allow_negative_numbers = true)]
        x: i128,
        n: u64,
    },
    /// One period of a + k·d modulo n.
    Progression {
        #[arg(allow_negative_numbers = true)]
        a: i128,
        d: u64,
        n: u64,
    },
    /// The term index ν with a + ν·d ≡ r (mod n).
    Solve {
        #[arg(allow_negative_numbers = true)]
        a: i128,
        d: u64,
        n: u64,
        #[arg(allow_negative_numbers = true)]
        r: i128,
    },
    /// Run invariant sweeps up to --max; exits 2 on any violation.
    Verify {
        #[arg(long = "max")]
        max_n: u64,
        /// Suite to run (repeatable): t1..t11, complement, oracle. Default: all.
        #[arg(long = "theorem")]
        theorems: Vec<Suite>,
    },
}

/// Executes a parsed command, returning the rendered output and exit code.
pub fn run(cli: &Cli) -> Result<(String, i32), CliError> {
    use commands::*;

    let (rows, code) = match &cli.command {
        Command::Totient { n, list } => (vec![cmd_totient(*n, *list)?], exit::SUCCESS),
        Command::Totatives { n } => (vec![cmd_totatives(*n)?], exit::SUCCESS),
        Command::TablePhi { lo, hi } => (cmd_table_phi(*lo, *hi)?, exit::SUCCESS),
        Command::TableOrd2 { lo, hi } => (cmd_table_ord2(*lo, *hi)?, exit::SUCCESS),
        Command::Trace { x, n } => (vec![cmd_trace(*x, *n)?], exit::SUCCESS),
        Command::Cosets { x, n } => (vec![cmd_cosets(*x, *n)?], exit::SUCCESS),
        Command::Progression { a, d, n } => (vec![cmd_progression(*a, *d, *n)?], exit::SUCCESS),
        Command::Solve { a, d, n, r } => (vec![cmd_solve(*a, *d, *n, *r)?], exit::SUCCESS),
        Command::Verify { max_n, theorems } => {
            let (rows, violated) = cmd_verify(*max_n, theorems, cli.seed)?;
            (
                rows,
                if violated {
                    exit::VIOLATION
                } else {
                    exit::SUCCESS
                },
            )
        }
    };
    Ok((report::render(&rows, cli.format), code))
}
