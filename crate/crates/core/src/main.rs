use std::process::ExitCode;

use clap::Parser;
use hypalt::cli::{emit, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|outcome| {
        emit(&cli.config(), &outcome.text)?;
        Ok(outcome.status)
    });
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("hypalt: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
