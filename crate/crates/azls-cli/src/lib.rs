//! Command-line experiment runner for `azls`.
//!
//! Each subcommand produces one table, written as CSV (default) or JSON to
//! stdout or to `--out`. Files are written to a temp sibling and renamed, so
//! a failed run never leaves partial output.

pub mod commands;
pub mod error;
pub mod problem;
pub mod table;

use std::path::PathBuf;

use azls::solvers::Step1Solver;
use clap::{Args, Parser, Subcommand};

pub use error::{CliError, Result};
use problem::{FunctionKind, ProblemArgs, ProblemKind, FRAME_PROBLEMS};
use table::{Format, Table};

#[derive(Debug, Parser)]
#[command(name = "azls", version, about = "AZ least-squares experiments: spectra, rank growth, timing, accuracy")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Clone, Debug, Args)]
pub struct GlobalArgs {
    #[arg(long, global = true, value_enum, default_value = "csv")]
    pub format: Format,
    /// Output file; stdout when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Base RNG seed; sweeps use seed + index per entry.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; only sweeps over independent N values use more than one.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
}

fn parse_solver(s: &str) -> std::result::Result<Step1Solver, String> {
    s.parse().map_err(|e: azls::Error| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Singular values of A, Z* and A - AZ*A (or of the Gram matrix).
    Singvals {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long)]
        n: usize,
    },
    /// Epsilon rank of A - AZ*A over a list of N.
    Rankgrowth {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Comma-separated N values.
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        /// Threshold relative to the problem's scale.
        #[arg(long, default_value_t = 1e-10, allow_negative_numbers = true)]
        eps: f64,
    },
    /// Wall-clock medians over a list of N (default N = 2^k + 1, k = 4..12).
    Timing {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, value_delimiter = ',')]
        n_list: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "az-rand-svd")]
        solver: commands::TimingSolver,
        #[arg(long, default_value_t = 1e-10, allow_negative_numbers = true)]
        eps: f64,
    },
    /// Approximation error of an AZ fit.
    Approx {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long)]
        n: usize,
        /// Defaults to `singular` for sumframe and `exp` otherwise.
        #[arg(long, value_enum)]
        function: Option<FunctionKind>,
        /// tsvd, tqr, rand-svd or rand-qr.
        #[arg(long, default_value = "rand-svd", value_parser = parse_solver)]
        solver: Step1Solver,
        #[arg(long, default_value_t = 1e-10, allow_negative_numbers = true)]
        eps: f64,
    },
    /// Weighted AZ sweep over eps_w on the jump-function setup.
    Weighted {
        #[arg(long, default_value_t = 121)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "1e-6,1e-5,1e-4,1e-3,1e-2,1e-1,1,10")]
        eps_w_list: Vec<f64>,
        #[arg(long, default_value = "rand-svd", value_parser = parse_solver)]
        solver: Step1Solver,
    },
}

fn require(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(CliError::usage(msg))
    }
}

fn check_eps(eps: f64) -> Result<()> {
    require(eps > 0.0 && eps.is_finite(), "--eps must be positive and finite")
}

/// Runs one parsed command and returns its table.
pub fn execute(command: &Command, global: &GlobalArgs) -> Result<Table> {
    match command {
        Command::Singvals { problem, n } => {
            let allowed = [FRAME_PROBLEMS, &[ProblemKind::Gram]].concat();
            problem.validate("singvals", &allowed)?;
            commands::singvals(problem, *n)
        }
        Command::Rankgrowth { problem, n_list, eps } => {
            problem.validate("rankgrowth", FRAME_PROBLEMS)?;
            require(!n_list.is_empty(), "--n-list must not be empty")?;
            check_eps(*eps)?;
            commands::rankgrowth(problem, n_list, *eps)
        }
        Command::Timing { problem, n_list, solver, eps } => {
            problem.validate("timing", &[ProblemKind::Fourier1d, ProblemKind::Chebyshev, ProblemKind::Legendre])?;
            check_eps(*eps)?;
            let ns = n_list.clone().unwrap_or_else(|| commands::power_sweep(4, 12));
            require(!ns.is_empty(), "--n-list must not be empty")?;
            commands::timing(problem, &ns, *solver, *eps, global.seed)
        }
        Command::Approx { problem, n, function, solver, eps } => {
            problem.validate("approx", FRAME_PROBLEMS)?;
            check_eps(*eps)?;
            let req = commands::ApproxRequest {
                n: *n,
                function: function.unwrap_or_else(|| problem.default_function()),
                solver: *solver,
                eps_rel: *eps,
                seed: global.seed,
            };
            commands::approx(problem, &req)
        }
        Command::Weighted { n, eps_w_list, solver } => {
            require(eps_w_list.iter().all(|e| *e >= 0.0 && e.is_finite()), "--eps-w-list entries must be finite and >= 0")?;
            commands::weighted(*n, eps_w_list, *solver, global.seed)
        }
    }
}

/// Runs a parsed CLI inside a pool of `--threads` workers
/// and writes the table.
pub fn run(cli: Cli) -> Result<()> {
    let g = &cli.global;
    require(g.threads >= 1, "--threads must be at least 1")?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(g.threads).build()?;
    let table = pool.install(|| execute(&cli.command, g))?;
    table.write(g.format, g.out.as_deref())
}
