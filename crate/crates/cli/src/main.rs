use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use drg_cli::args::Cli;
use drg_cli::commands::{run, EXIT_REFUSED};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.stdout.as_bytes()).is_err() {
                return ExitCode::from(EXIT_REFUSED as u8);
            }
            ExitCode::from(outcome.code as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_REFUSED as u8)
        }
    }
}
