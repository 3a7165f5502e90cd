mod args;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use kummer::{Error, SeriesBudget};

use args::{Cli, Command};
use output::{Kind, OutputFormat};

/// Exit status for a library error: 3 when an iteration failed to settle,
/// 2 for everything outside the domain.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NonConvergence { .. } | Error::Inconclusive { .. } => 3,
        _ => 2,
    }
}

fn run(cli: &Cli) -> kummer::Result<String> {
    let out = OutputFormat {
        kind: if cli.json { Kind::Json } else { Kind::Csv },
        precision: cli.precision as usize,
    };
    let series_tol = match (&cli.command, cli.tol) {
        (Command::Identity(_), _) | (_, None) => SeriesBudget::default().tol,
        (_, Some(t)) => t,
    };
    let b = SeriesBudget::new(series_tol, cli.max_terms)?;
    match &cli.command {
        Command::Eval(a) => commands::cmd_eval(a, &b, &out),
        Command::Identity(a) => commands::cmd_identity(a, cli.tol, &out),
        Command::Laguerre(a) => commands::cmd_laguerre(a, &out),
        Command::Characteristic(a) => commands::cmd_characteristic(a, &b, &out),
        Command::Order(a) => commands::cmd_order(a, &b, &out),
        Command::Zeros(a) => commands::cmd_zeros(a, &b, &out),
        Command::App(a) => commands::cmd_app(&a.function, &out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
