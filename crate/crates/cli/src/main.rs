mod invariants;
mod output;
mod poly;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use output::{CliResult, CommandResult};

/// Exact polarity calculus and invariant tables of surfaces and their duals.
#[derive(Parser)]
#[command(name = "dualsurf", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form invariant tables.
    #[command(subcommand)]
    Invariants(invariants::InvariantsCommand),
    /// Identity suites.
    #[command(subcommand)]
    Verify(verify::VerifyCommand),
    /// Computations on an explicit polynomial.
    Poly(poly::PolyArgs),
}

fn run(cli: &Cli) -> CliResult<CommandResult> {
    match &cli.command {
        Command::Invariants(cmd) => invariants::run(cmd),
        Command::Verify(cmd) => verify::run(cmd),
        Command::Poly(args) => poly::run(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(result) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&result.to_json()).expect("serializable")
                );
            } else {
                print!("{}", result.to_text());
            }
            if result.failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}
