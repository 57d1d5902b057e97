use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use phasespin_cli::{render, run, Cli, RunConfig};

fn main() -> ExitCode {
    let cfg = RunConfig::from(Cli::parse());
    let report = match run(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let text = render(&report, &cfg);
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("cannot write output: {e}");
        return ExitCode::from(1);
    }
    for f in &report.failures {
        eprintln!("FAIL {f}");
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
