//! `sandwich`: carve a simple root system at an extremity node, analyze the
//! nilradical spanned by the negative block, and audit the published
//! classification table.
//!
//! Exit codes: 0 completed (discrepancies are reported in-band), 1 output
//! failure, 2 invalid type or node, 3 node exists but is not an extremity.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sandwich_core::carving::{carve, CarveError};
use sandwich_core::classify::{classify_all, run_case, verify_paper};
use sandwich_core::rootsys::{Family, SimpleType};

use sandwich_cli::render;
use sandwich_cli::report::{self, CasesOut};

#[derive(Parser)]
#[command(
    name = "sandwich",
    about = "Exact classification of the nilradicals carved out of simple root systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one extremity deletion in full detail
    Inspect {
        /// Family letter, optionally with the rank attached (A, G2, E8)
        #[arg(value_name = "TYPE")]
        stype: String,
        rank: usize,
        node: usize,
    },
    /// Analyze every extremity deletion up to a rank bound
    Classify {
        /// Largest rank swept in the classical families (at least 4)
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Replay the published table row by row and report matches
    VerifyPaper {
        /// Largest rank checked for the rank-parametric rows (at least 4)
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

/// Resolves the TYPE and RANK arguments to a simple type. A rank attached to
/// the letter (as in `G2` or `E8`) must agree with the rank argument.
fn parse_type(text: &str, rank: usize) -> Result<SimpleType, Failure> {
    let mut chars = text.chars();
    let letter = chars.next().ok_or_else(|| fail(2, "empty type"))?;
    let family = Family::from_char(letter)
        .ok_or_else(|| fail(2, format!("unknown family letter '{letter}'")))?;
    let rest = chars.as_str();
    if !rest.is_empty() {
        let attached: usize = rest
            .parse()
            .map_err(|_| fail(2, format!("malformed type '{text}'")))?;
        if attached != rank {
            return Err(fail(
                2,
                format!("type '{text}' names rank {attached}, but the rank argument is {rank}"),
            ));
        }
    }
    SimpleType::new(family, rank).map_err(|e| fail(2, e.to_string()))
}

fn check_max_rank(max_rank: usize) -> Result<(), Failure> {
    if max_rank < 4 {
        return Err(fail(2, "--max-rank must be at least 4"));
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| fail(1, format!("cannot serialize report: {e}")))
}

fn emit(rendered: &str, path: Option<&Path>) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, rendered)
            .map_err(|e| fail(1, format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let rendered = match cli.command {
        Command::Inspect { stype, rank, node } => {
            let stype = parse_type(&stype, rank)?;
            let carving = carve(stype, node).map_err(|e| match e {
                CarveError::NodeOutOfRange { .. } => fail(2, e.to_string()),
                CarveError::NotExtremity { .. } => fail(3, e.to_string()),
            })?;
            let report = run_case(stype, node).expect("node already validated");
            match cli.format {
                Format::Text => render::inspect_text(&carving, &report),
                Format::Json => to_json(&report::inspect_out(&carving, &report))?,
            }
        }
        Command::Classify { max_rank } => {
            check_max_rank(max_rank)?;
            let reports = classify_all(max_rank);
            match cli.format {
                Format::Text => render::classify_text(&reports),
                Format::Json => to_json(&CasesOut {
                    cases: reports.iter().map(report::case_out).collect(),
                })?,
            }
        }
        Command::VerifyPaper { max_rank } => {
            check_max_rank(max_rank)?;
            let audit = verify_paper(max_rank);
            match cli.format {
                Format::Text => render::verify_text(&audit),
                Format::Json => to_json(&CasesOut {
                    cases: audit
                        .entries
                        .iter()
                        .flat_map(|a| a.reports.iter().map(report::case_out))
                        .collect(),
                })?,
            }
        }
    };
    emit(&rendered, cli.output.as_deref())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
