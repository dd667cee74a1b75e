use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use thh_algebra_cli::{emit, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("thh-algebra: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    match emit(&cli, &report) {
        Ok(text) => {
            let _ = std::io::stdout().write_all(text.as_bytes());
        }
        Err(e) => {
            eprintln!("thh-algebra: cannot write report: {e}");
            return ExitCode::from(3);
        }
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
