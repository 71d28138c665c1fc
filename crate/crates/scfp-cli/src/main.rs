mod commands;
mod config;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{CliError, ReproduceTarget, SuiteTarget};

#[derive(Parser)]
#[command(
    name = "scfp",
    version,
    about = "Inertial shrinking-projection solvers for split common fixed point problems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the problem described by a TOML config and emit the iterate
    /// trace as CSV.
    Run {
        /// Path to the problem configuration.
        #[arg(long)]
        config: PathBuf,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Override the configured iteration limit.
        #[arg(long)]
        max_iter: Option<usize>,
        /// Stop early once both fixed point residuals fall below this value.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Regenerate the built-in benchmark reference tables and plot data.
    Reproduce {
        #[arg(value_enum, default_value_t = TargetArg::All)]
        target: TargetArg,
        /// Directory the table files are written into.
        #[arg(long, default_value = ".")]
        output_dir: PathBuf,
    },
    /// Compare the inertial method against the non-inertial baseline and
    /// report the step-size case ordering.
    Compare {
        /// Accuracy threshold for the iteration-count comparison.
        #[arg(long, default_value_t = 1e-6)]
        threshold: f64,
        /// Number of iterations to run each method for.
        #[arg(long, default_value_t = 60)]
        steps: usize,
    },
    /// Run the built-in verification suites.
    Check {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Seed for the sampled checks.
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Table1,
    Table2,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Geometry,
    Operators,
    Solver,
    All,
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Run { config, output, max_iter, tol } => {
            commands::cmd_run(&config, output.as_deref(), max_iter, tol)
        }
        Command::Reproduce { target, output_dir } => {
            let target = match target {
                TargetArg::Table1 => ReproduceTarget::Table1,
                TargetArg::Table2 => ReproduceTarget::Table2,
                TargetArg::All => ReproduceTarget::All,
            };
            commands::cmd_reproduce(target, &output_dir)
        }
        Command::Compare { threshold, steps } => commands::cmd_compare(threshold, steps),
        Command::Check { suite, seed } => {
            let suite = match suite {
                SuiteArg::Geometry => SuiteTarget::Geometry,
                SuiteArg::Operators => SuiteTarget::Operators,
                SuiteArg::Solver => SuiteTarget::Solver,
                SuiteArg::All => SuiteTarget::All,
            };
            commands::cmd_check(suite, seed)
        }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
