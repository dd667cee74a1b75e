//! Command-line driver for the `thh-algebra` verification suites.

pub mod algebras;
pub mod report;
pub mod suites;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use thh_algebra::Error;

use report::{CheckRecord, Report};
use suites::{AdamsParams, BurnsideParams, HhParams, NormParams, WittParams};

pub const OUT_DIR_ENV: &str = "THH_ALGEBRA_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "thh-algebra", version, about = "Exact checks for cyclic bar constructions, Witt vectors, Adams operations and norms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the randomised checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Directory receiving `<subcommand>-report.json`.
    #[arg(long, global = true, env = OUT_DIR_ENV)]
    pub out_dir: Option<PathBuf>,
    /// Omit wall times, making reports byte-for-byte reproducible.
    #[arg(long, global = true)]
    pub no_timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hochschild homology, cyclic and twisted bar constructions, subdivision.
    Hh(HhParams),
    /// p-typical Witt vectors.
    Witt(WittParams),
    /// Adams operations on cyclic bar constructions.
    AdamsVerify(AdamsParams),
    /// Tensor-power norms, transfer ideals and the C₂ Tambara model.
    Norm(NormParams),
    /// Burnside rings of cyclic groups.
    Burnside(BurnsideParams),
    /// Every suite with its default parameters.
    All,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Hh(_) => "hh",
            Command::Witt(_) => "witt",
            Command::AdamsVerify(_) => "adams-verify",
            Command::Norm(_) => "norm",
            Command::Burnside(_) => "burnside",
            Command::All => "all",
        }
    }
}

/// Why a run stopped without a report.
#[derive(Debug)]
pub enum RunError {
    /// The parameters cannot be run (exit code 2).
    Usage(String),
    /// A computation broke an internal invariant (exit code 3).
    Internal(String),
}

impl RunError {
    pub fn exit_code(&self) -> u8 {
        match self {
            RunError::Usage(_) => 2,
            RunError::Internal(_) => 3,
        }
    }
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Usage(m) => write!(f, "usage error: {m}"),
            RunError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_)
            | Error::InvalidRing(_)
            | Error::BudgetExceeded(_)
            | Error::BasisSizeExceeded { .. }
            | Error::InsufficientTruncation(_)
            | Error::DegreeOverflow { .. }
            | Error::LengthUnderflow(_) => RunError::Usage(e.to_string()),
            _ => RunError::Internal(e.to_string()),
        }
    }
}

fn echo<T: Serialize>(params: &T) -> serde_json::Value {
    serde_json::to_value(params).expect("parameters serialise")
}

/// Runs the requested suites and assembles the report in a fixed order.
pub fn run(cli: &Cli) -> Result<Report, RunError> {
    let timings = !cli.no_timings;
    let mut checks: Vec<CheckRecord> = Vec::new();
    let params = match &cli.command {
        Command::Hh(p) => {
            checks.extend(suites::hh_suite(p, timings)?);
            echo(p)
        }
        Command::Witt(p) => {
            checks.extend(suites::witt_suite(p, cli.seed, timings)?);
            echo(p)
        }
        Command::AdamsVerify(p) => {
            checks.extend(suites::adams_suite(p, timings)?);
            echo(p)
        }
        Command::Norm(p) => {
            checks.extend(suites::norm_suite(p, timings)?);
            echo(p)
        }
        Command::Burnside(p) => {
            checks.extend(suites::burnside_suite(p, cli.seed, timings)?);
            echo(p)
        }
        Command::All => {
            let (hh, witt, adams, norm, burnside) = (
                HhParams::default(),
                WittParams::default(),
                AdamsParams::default(),
                NormParams::default(),
                BurnsideParams::default(),
            );
            checks.extend(suites::hh_suite(&hh, timings)?);
            checks.extend(suites::witt_suite(&witt, cli.seed, timings)?);
            checks.extend(suites::adams_suite(&adams, timings)?);
            checks.extend(suites::norm_suite(&norm, timings)?);
            checks.extend(suites::burnside_suite(&burnside, cli.seed, timings)?);
            json!({
                "hh": echo(&hh),
                "witt": echo(&witt),
                "adams-verify": echo(&adams),
                "norm": echo(&norm),
                "burnside": echo(&burnside),
            })
        }
    };
    let config = json!({ "format": cli.format, "timings": timings, "parameters": params });
    Ok(Report::new(cli.command.name(), cli.seed, config, checks))
}

/// Renders the report on stdout and writes it to the output directory, if any.
pub fn emit(cli: &Cli, report: &Report) -> std::io::Result<String> {
    let json = serde_json::to_string_pretty(report).expect("report serialises");
    if let Some(dir) = &cli.out_dir {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join(format!("{}-report.json", report.subcommand)), format!("{json}\n"))?;
    }
    Ok(match cli.format {
        Format::Json => format!("{json}\n"),
        Format::Text => report.to_text(),
    })
}
