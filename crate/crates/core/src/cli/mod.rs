//! Command-line front end. The binary only forwards its arguments to [`run`].
//!
//! Exit codes: 0 success (pass, confirmed, computed), 1 input error,
//! 2 not applicable or no fixed point, 3 undecided.

mod document;
mod output;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::geom::GeomError;
use crate::hypotheses::{Theorem, DEFAULT_MAX_DEPTH};
use crate::plmap::PlMapError;
use crate::rational::RationalParseError;
use crate::scenarios::{gen_by_name, scenario_names, DegreeTarget, Scenario, ScenarioError};

pub use document::{
    parse_document, parse_scenario, serialize_scenario, ComplexBlock, MapBlock, Metadata, ScenarioDocument, SubBallBlock,
    SCHEMA_VERSION,
};
pub use output::{check_document, degree_document, report_document, solve_document, CheckDoc, DegreeDoc, ReportDoc, SolveDoc};

pub const MAX_DEPTH_ENV: &str = "PLDEGREE_MAX_DEPTH";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("geometry error: {0}")]
    Geometry(#[from] GeomError),
    #[error("rational parse error: {0}")]
    Rational(#[from] RationalParseError),
    #[error("map error: {0}")]
    Map(#[from] PlMapError),
    #[error(transparent)]
    Scenario(#[from] ScenarioError),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    InputError = 1,
    NotApplicable = 2,
    Undecided = 3,
}

impl ExitCode {
    pub fn code(self) -> i32 {
        self as i32
    }
}

/// Result of one invocation: an exit code and the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: ExitCode,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: ExitCode, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn error(e: impl std::fmt::Display) -> Self {
        Outcome { code: ExitCode::InputError, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveMode {
    Exact,
    Sampled,
}

#[derive(Debug, Parser)]
#[command(name = "pldegree", version, about = "Exact PL degrees and fixed-point certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Command {
    /// Write a generated scenario.
    Gen {
        /// Scenario name; `--list` shows them all.
        #[arg(required_unless_present = "list")]
        name: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        list: bool,
    },
    /// Compute one degree of a scenario.
    Degree {
        #[arg(long, default_value = "injective")]
        target: String,
        scenario: PathBuf,
    },
    /// Check a theorem's hypotheses.
    Check {
        /// auto, T33, T35, T47, T48, Cor34, Cor36 or Cor49.
        #[arg(long, default_value = "auto")]
        theorem: String,
        #[arg(long, env = MAX_DEPTH_ENV, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
        /// Print the reports as text instead of JSON.
        #[arg(long)]
        text: bool,
        scenario: PathBuf,
    },
    /// Find fixed points and write a certificate.
    Solve {
        #[arg(long, value_enum, default_value_t = SolveMode::Exact)]
        mode: SolveMode,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, env = MAX_DEPTH_ENV, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
        #[arg(long, default_value = "auto")]
        theorem: String,
        /// Grid resolution exponent for sampled mode.
        #[arg(long, default_value_t = 4)]
        grid_depth: usize,
        scenario: PathBuf,
    },
    /// Degrees, checks and the exact certificate in one document.
    Report {
        #[arg(long, env = MAX_DEPTH_ENV, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
        scenario: PathBuf,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(ExitCode::Success, text),
                _ => Outcome { code: ExitCode::InputError, stdout: String::new(), stderr: text },
            };
        }
    };
    match &cli.command {
        Command::Gen { name, output, list } => {
            if *list {
                return Outcome::ok(ExitCode::Success, scenario_names().join("\n") + "\n");
            }
            let name = name.as_deref().unwrap_or_default();
            match gen_by_name(name) {
                Ok(s) => emit(serialize_scenario(&s), output.as_deref(), ExitCode::Success),
                Err(e) => Outcome::error(format!("{e}; try `gen --list`")),
            }
        }
        Command::Degree { scenario, .. } | Command::Check { scenario, .. } | Command::Solve { scenario, .. } | Command::Report { scenario, .. } => {
            match load(scenario) {
                Ok(s) => dispatch(&cli.command, &s),
                Err(e) => Outcome::error(e),
            }
        }
    }
}

fn load(path: &Path) -> Result<Scenario, CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_scenario(&bytes)
}

fn emit(text: String, path: Option<&Path>, code: ExitCode) -> Outcome {
    match path {
        Some(p) => match std::fs::write(p, &text) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: format!("wrote {}\n", p.display()) },
            Err(e) => Outcome::error(format!("{}: {e}", p.display())),
        },
        None => Outcome::ok(code, text),
    }
}

/// `None` for `auto`.
pub fn parse_theorem(text: &str) -> Result<Option<Theorem>, CliError> {
    if text.eq_ignore_ascii_case("auto") {
        return Ok(None);
    }
    text.parse().map(Some).map_err(CliError::Usage)
}

/// Runs a scenario command; `gen` has no scenario and is rejected here.
pub fn dispatch(command: &Command, s: &Scenario) -> Outcome {
    match command {
        Command::Gen { .. } => Outcome::error("gen takes no scenario"),
        Command::Degree { target, .. } => {
            let target: DegreeTarget = match target.parse() {
                Ok(t) => t,
                Err(e) => return Outcome::error(e),
            };
            let (doc, code) = degree_document(s, target);
            Outcome::ok(code, document::to_json(&doc))
        }
        Command::Check { theorem, max_depth, text, .. } => {
            let hint = match parse_theorem(theorem) {
                Ok(h) => h,
                Err(e) => return Outcome::error(e),
            };
            let (doc, code) = check_document(s, hint, *max_depth);
            let body = if *text { doc.reports.iter().map(ToString::to_string).collect::<String>() } else { document::to_json(&doc) };
            Outcome::ok(code, body)
        }
        Command::Solve { mode, tol, max_depth, theorem, grid_depth, .. } => {
            let hint = match parse_theorem(theorem) {
                Ok(h) => h,
                Err(e) => return Outcome::error(e),
            };
            match solve_document(s, *mode, hint, *max_depth, *grid_depth, *tol) {
                Ok((doc, code)) => {
                    let mut out = Outcome::ok(code, document::to_json(&doc));
                    if doc.status.as_deref() == Some("Inconsistent") {
                        out.stderr = "INCONSISTENT: a guaranteed fixed point is missing or fails re-evaluation\n".into();
                    }
                    out
                }
                Err(e) => Outcome::error(e),
            }
        }
        Command::Report { max_depth, output, .. } => match report_document(s, *max_depth) {
            Ok((doc, code)) => emit(document::to_json(&doc), output.as_deref(), code),
            Err(e) => Outcome::error(e),
        },
    }
}
