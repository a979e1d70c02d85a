//! Command-line front end for `design-lines-core`.
//!
//! Every command produces a [`output::Report`] which is rendered as an
//! aligned table, JSON lines (keys sorted) or CSV. Numbers are printed
//! exactly, as integers or `num/den`.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub mod catalog;
pub mod commands;
pub mod mf;
pub mod output;

pub use output::{Format, Report};

/// Failures mapped to process exit codes: 1 internal, 2 usage, 3 domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Domain(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(m) => write!(f, "{m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<design_lines_core::Error> for CliError {
    fn from(e: design_lines_core::Error) -> Self {
        use design_lines_core::Error as E;
        match e {
            E::Parse(_) | E::InvalidLine(_) => CliError::Usage(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "design-lines", version, about = "Exact geometry of block-design parameters")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
    /// Upper bound on r for enumeration and range sieves.
    #[arg(long, global = true)]
    pub max_r: Option<i64>,
    /// Upper bound on v for enumeration and range sieves.
    #[arg(long, global = true)]
    pub max_v: Option<i64>,
    /// Admissibility profile for enumeration.
    #[arg(long, global = true, value_enum, default_value = "default")]
    pub filter: FilterArg,
    /// Catalog CSV; falls back to $DESIGN_LINES_CATALOG.
    #[arg(long, global = true)]
    pub catalog: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    Default,
    StrictFisher,
    None,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Variety membership, Q, order, planes and family tags of a point.
    Classify {
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
    /// The four design lines through a bumpy point.
    Lines {
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
    /// Integer points on a line, e.g. `F0(3/2,1/2) --max-r 39`.
    Enumerate { line: String },
    /// Existence sieve on a point, or on every point of `--line` within the bound.
    Sieve {
        point: Option<String>,
        #[arg(long, conflicts_with = "point")]
        line: Option<String>,
    },
    /// Family predicates and constructions.
    #[command(subcommand)]
    Families(FamiliesCommand),
    /// The first solutions of 3l² - 2m² = 1.
    Pell { count: usize },
    /// Integer-valued pseudo-designs.
    #[command(subcommand)]
    Pseudo(PseudoCommand),
    /// Reproduce a reference table.
    Tables(TablesArgs),
}

#[derive(Debug, Subcommand)]
pub enum FamiliesCommand {
    /// Tags, parents and 3-design data of a point.
    Point {
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
    /// Family (A) point, parent-line images and 3-design test of a line.
    Line { line: String },
    /// The design of the F₁(1,1/3) family indexed by m and its symmetric parent.
    Cb { m: u64 },
    /// A difference-family line F0/F1(f,p), optionally evaluated at block sizes.
    Df {
        #[arg(value_enum)]
        kind: DfKind,
        f: String,
        p: String,
        /// Block sizes to evaluate (repeatable).
        #[arg(long = "k")]
        ks: Vec<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DfKind {
    F0,
    F1,
}

#[derive(Debug, Subcommand)]
pub enum PseudoCommand {
    /// Find integer multiplicities with constant pair sums λ.
    Solve {
        v: u64,
        k: u64,
        lambda: u64,
        /// Skip the cyclic-orbit reduction.
        #[arg(long)]
        full_only: bool,
    },
    /// Check a multiplicity file (`-` for stdin) and print its design point.
    Verify { file: PathBuf },
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[arg(value_enum)]
    pub name: TableName,
    /// f for table4.
    #[arg(long, default_value = "3/2")]
    pub f: String,
    /// p for table4.
    #[arg(long, default_value = "1/2")]
    pub p: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableName {
    Table1,
    Table4,
    Table6,
    F0List,
}

/// Runs a parsed command line and returns the rendered output.
pub fn execute(cli: Cli) -> Result<String, CliError> {
    commands::dispatch(cli)
}
