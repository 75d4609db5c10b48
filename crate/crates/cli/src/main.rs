use std::process::ExitCode;

use clap::Parser;
use partgal_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.to_text());
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, report.to_json()) {
                    eprintln!("partgal: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("partgal: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
