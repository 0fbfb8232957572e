mod args;
mod commands;
mod config;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::Cli;

/// Invalid flags or input values.
#[derive(Debug)]
pub struct UsageError(pub String);

/// Why a command produced no report.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    NonConverged(String),
    Internal(String),
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e.0)
    }
}

impl From<treezeta_core::Error> for Failure {
    fn from(e: treezeta_core::Error) -> Self {
        use treezeta_core::Error as E;
        match e {
            E::NonConverged { .. } => Failure::NonConverged(e.to_string()),
            E::Consistency(_) | E::NonFinite => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

const EXIT_USAGE: u8 = 2;
const EXIT_NON_CONVERGED: u8 = 3;
const EXIT_FAIL: u8 = 1;

fn run(cli: &Cli) -> Result<u8, Failure> {
    let settings = config::resolve(&cli.global)?;
    let start = Instant::now();
    let mut out = commands::dispatch(&cli.command, &settings)?;
    if cli.global.timings {
        let ms = start.elapsed().as_secs_f64() * 1e3;
        out.report.timings = Some([("total_ms".to_string(), ms)].into_iter().collect());
    }
    let text = report::render(&out, cli.global.format).map_err(Failure::Internal)?;
    match &cli.global.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    Ok(out.report.status.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::NonConverged(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_NON_CONVERGED)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}
