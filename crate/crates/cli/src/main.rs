use std::process::ExitCode;

use clap::Parser;
use design_lines::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("design-lines: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
