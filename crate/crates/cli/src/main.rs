//! `spectral-energy`: graph energy bounds from the command line.
//!
//! Exit codes: 0 success, 1 usage, 2 parse error (analyze, or survey under
//! `--strict`), 3 internal inconsistency.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_INCONSISTENT: u8 = 3;

/// Environment override for the floating zero tolerance.
pub const ZERO_TOL_ENV: &str = "SPECTRAL_ZERO_TOL";

#[derive(Debug, Parser)]
#[command(name = "spectral-energy", version, about = "Energy lower bounds, equality certificates and case studies for graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Write output to PATH instead of stdout
    #[arg(long, value_name = "PATH", global = true)]
    pub out: Option<PathBuf>,
    /// Fixed γ depth (default: run to convergence, k ≤ 200)
    #[arg(long, value_name = "N", global = true)]
    pub kmax: Option<usize>,
    /// Zero tolerance for non-integer input (overrides SPECTRAL_ZERO_TOL)
    #[arg(long, value_name = "X", global = true)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Graph in graph6 encoding
    #[arg(long, value_name = "STRING")]
    pub g6: Option<String>,
    /// Named family and its integer parameters, e.g. `--family complete_bipartite 2 3`
    #[arg(long, num_args = 1.., value_names = ["NAME", "ARGS"])]
    pub family: Option<Vec<String>>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full bound report, certificates and witness for one graph
    Analyze {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        common: Common,
    },
    /// One row per graph6 line of FILE
    Survey {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Abort on the first malformed line
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Reproduce one of the tree / join / blow-up comparisons
    CaseStudy {
        #[command(subcommand)]
        which: CaseStudy,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Subcommand)]
pub enum CaseStudy {
    /// Subdivided stars (brooms), Frobenius bound against 2√m
    Tree {
        #[arg(long, default_value_t = 4)]
        from: usize,
        #[arg(long, default_value_t = 40)]
        to: usize,
    },
    /// K_{r1,r1} ∨ K_{r2,r2} over a grid, or a single pair with --r1/--r2
    Join {
        #[arg(long, default_value_t = 10)]
        r1_max: usize,
        #[arg(long, default_value_t = 10)]
        r2_max: usize,
        #[arg(long, requires = "r2")]
        r1: Option<usize>,
        #[arg(long, requires = "r1")]
        r2: Option<usize>,
    },
    /// Blow-up G[K̄_t, …, K̄_t] of a base graph
    Blowup {
        #[command(flatten)]
        input: GraphInput,
        /// Blow-up factors (comma separated)
        #[arg(long, value_delimiter = ',', default_value = "2")]
        t: Vec<usize>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return if usage { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Analyze { input, format, common } => commands::analyze(&input, format, &common),
        Command::Survey {
            file,
            format,
            strict,
            common,
        } => commands::survey(&file, format, strict, &common),
        Command::CaseStudy { which, common } => commands::case_study(&which, &common),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {:#}", e.error);
            ExitCode::from(e.code)
        }
    }
}
