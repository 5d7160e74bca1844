use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use metric_committee_cli::{error_exit_code, run, Cli, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(error_exit_code(&e));
        }
    };
    let written = match &cli.global.out {
        Some(path) => fs::write(path, &outcome.text),
        None => std::io::stdout().lock().write_all(outcome.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_INPUT);
    }
    ExitCode::from(outcome.exit_code())
}
