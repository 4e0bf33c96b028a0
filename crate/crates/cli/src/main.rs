mod args;
mod commands;
mod grid;

use std::process::ExitCode;

use clap::Parser;
use hypercolor::Error;

use args::Cli;

/// Exit status for each error class.
fn exit_code(err: &Error) -> u8 {
    match err {
        _ if err.is_io() => 2,
        Error::Config(_) | Error::InvalidArgument(_) | Error::TooLarge { .. } => 1,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
