//! Batch front end for `phasespin-core`: each command builds a [`Report`]
//! table that renders to CSV or JSON.

pub mod commands;
pub mod config;
pub mod format;

use std::fmt;

pub use config::{Cli, RunConfig};
pub use format::{fmt_g, Report};

#[derive(Debug)]
pub enum CliError {
    /// Invalid flag combination; exit status 2.
    Usage(String),
    /// Library failure during a computation; exit status 1.
    Core(phasespin_core::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Core(e) => write!(f, "computation failed: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<phasespin_core::Error> for CliError {
    fn from(e: phasespin_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(_) => 1,
        }
    }
}

pub fn run(cfg: &RunConfig) -> Result<Report, CliError> {
    match cfg.command {
        "curve" => commands::curve(cfg),
        "single" => commands::single(cfg),
        "gram" => commands::gram(cfg),
        "difftest" => commands::difftest(cfg),
        "algebra-check" => commands::algebra_check(cfg),
        other => Err(CliError::Usage(format!("unknown command `{other}`"))),
    }
}

/// Serialized report in the configured format.
pub fn render(report: &Report, cfg: &RunConfig) -> String {
    match cfg.format {
        config::Format::Csv => report.to_csv(),
        config::Format::Json => report.to_json(serde_json::to_value(cfg).expect("config serializes")),
    }
}
