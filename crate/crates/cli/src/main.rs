mod args;
mod commands;
mod output;
mod search;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Everything ran and every comparison agreed.
const EXIT_OK: u8 = 0;
/// A criterion disagreed with the reference.
const EXIT_MISMATCH: u8 = 1;
/// Bad input or I/O failure.
const EXIT_ERROR: u8 = 2;

fn dispatch(cli: &Cli) -> anyhow::Result<bool> {
    if let Some(jobs) = cli.common.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global()?;
    }
    match &cli.command {
        Command::FieldInfo(a) => commands::field_info(cli, a),
        Command::Verify(a) => commands::verify(cli, a),
        Command::Search(a) => search::run(cli, a),
        Command::Crosscheck(a) => commands::crosscheck(cli, a),
        Command::Kloosterman(a) => commands::kloosterman(cli, a),
        Command::CurveCount(a) => commands::curve_count(cli, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(true) => ExitCode::from(EXIT_OK),
        Ok(false) => ExitCode::from(EXIT_MISMATCH),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
