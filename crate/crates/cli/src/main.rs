mod cli;
mod commands;
mod config;

use std::process::ExitCode;

use clap::Parser;

use crate::cli::{Cli, Format};
use crate::commands::{execute, EXIT_CONFIG};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = match config::resolve(cli) {
        Ok(run) => run,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    let outcome = match execute(&run) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    match run.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&outcome.report).expect("report serializes")),
        Format::Text => print!("{}", outcome.text),
    }
    ExitCode::from(outcome.status)
}
