mod cli;
mod commands;
mod config;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use crate::cli::Cli;
use crate::commands::{Failure, EXIT_USAGE};

fn output_path(cmd: &cli::Command) -> Option<&std::path::Path> {
    use cli::Command::*;
    let out = match cmd {
        Classify(a) => &a.out,
        Curve(a) => &a.out,
        Whittaker(a) => &a.out,
        Reconstruct(a) => &a.out,
        Verify(a) => &a.out,
        Ezero(a) => &a.out,
        Case1(a) => &a.out,
        Laguerre(a) => &a.out,
        Kovacic(a) => &a.out,
    };
    out.output.as_deref()
}

fn main() -> ExitCode {
    let argv = match config::inject(std::env::args().collect()) {
        Ok(a) => a,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let outcome = match commands::run(&cli.command) {
        Ok(o) => o,
        Err(f) => {
            eprintln!("error: {}", f.message());
            return ExitCode::from(f.code());
        }
    };
    for w in &outcome.warnings {
        eprintln!("{w}");
    }
    let written = match output_path(&cli.command) {
        Some(p) => std::fs::write(p, &outcome.body)
            .map_err(|e| Failure::Data(format!("cannot write {}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(outcome.body.as_bytes())
            .map_err(|e| Failure::Data(format!("cannot write stdout: {e}"))),
    };
    if let Err(f) = written {
        eprintln!("error: {}", f.message());
        return ExitCode::from(f.code());
    }
    ExitCode::from(outcome.code)
}
