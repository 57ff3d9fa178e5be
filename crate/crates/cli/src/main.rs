use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gproj::checks::{CheckName, Execution};
use gproj::signature::MAX_DIM;
use gproj::ProjectionKind;
use gproj_cli::commands::{
    cmd_check, cmd_eval, cmd_lift, cmd_table, parse_algebra, CliError, EXIT_CHECK_FAILED, EXIT_OK,
    EXIT_USAGE,
};

#[derive(Parser)]
#[command(
    name = "gproj",
    version,
    about = "Exact geometric algebra calculator and projection checks"
)]
struct Cli {
    /// Refuse algebras with more basis vectors than this.
    #[arg(long, global = true, default_value_t = MAX_DIM)]
    max_dim: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and print its canonical form.
    Eval {
        /// Algebra as `p,q,r`.
        #[arg(long, default_value = "3,0,0")]
        algebra: String,
        expr: String,
    },
    /// Evaluate an expression and print its image under the lift.
    Lift {
        #[arg(long)]
        algebra: String,
        expr: String,
    },
    /// Print the Cayley table of the basis blades.
    Table {
        #[arg(long)]
        algebra: String,
    },
    /// Run a seeded property check and print a JSON report.
    Check {
        name: CheckName,
        #[arg(long, default_value = "3,0,0")]
        algebra: String,
        /// `inverse` or `reverse`; defaults to the check's first supported kind.
        #[arg(long)]
        kind: Option<ProjectionKind>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run trials on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

fn execution(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::default()
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let max_dim = Some(cli.max_dim);
    match cli.command {
        Command::Eval { algebra, expr } => {
            println!("{}", cmd_eval(parse_algebra(&algebra, max_dim)?, &expr)?);
        }
        Command::Lift { algebra, expr } => {
            println!("{}", cmd_lift(parse_algebra(&algebra, max_dim)?, &expr)?);
        }
        Command::Table { algebra } => {
            println!("{}", cmd_table(parse_algebra(&algebra, max_dim)?));
        }
        Command::Check {
            name,
            algebra,
            kind,
            trials,
            seed,
            sequential,
        } => {
            let sig = parse_algebra(&algebra, max_dim)?;
            let report = cmd_check(name, sig, kind, trials, seed, execution(sequential))?;
            println!("{}", report.to_json());
            if !report.passed {
                return Ok(EXIT_CHECK_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
