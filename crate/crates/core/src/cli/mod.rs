//! Command-line surface: `classify`, `pair`, `fuzz` and `svg`.
//!
//! Exit statuses:
//!
//! | status | meaning                                       |
//! |--------|-----------------------------------------------|
//! | 0      | success                                       |
//! | 1      | fuzz campaign found disagreements or errors   |
//! | 2      | usage error (bad flags)                       |
//! | 3      | input could not be parsed                     |
//! | 4      | input parsed but is geometrically invalid     |
//! | 5      | I/O failure                                   |
//! | 6      | internal error                                |

pub mod fuzz;
pub mod input;
pub mod record;
pub mod svg;

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Tolerance;

pub use record::{classify_pair_record, classify_triangle_record, CaseRecord};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("usage error: {0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Invalid(_) => 4,
            CliError::Io(_) => 5,
            CliError::Internal(_) => 6,
        }
    }
}

pub const EXIT_FUZZ_FAILURE: i32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exact,
    Approximate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    JsonLines,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    pub tolerance: Tolerance,
    pub seed: u64,
    pub trials: usize,
    pub out: Option<PathBuf>,
    pub output: OutputFormat,
    /// Attach wall-clock timings to records (excluded by default so that
    /// machine-readable output is reproducible).
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            mode: Mode::Exact,
            tolerance: Tolerance::default(),
            seed: 0,
            trials: 1000,
            out: None,
            output: OutputFormat::Human,
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let t = &self.tolerance;
        if !(t.eps > 0.0 && t.eps.is_finite()) || !(t.eps_deg > 0.0 && t.eps_deg.is_finite()) {
            return Err(CliError::Usage("epsilon and epsilon-deg must be positive".into()));
        }
        if self.trials == 0 {
            return Err(CliError::Usage("trials must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Parser)]
#[command(name = "hypalt", version, about = "Altitudes of hyperbolic triangles in the upper half-plane")]
pub struct Cli {
    /// Exact rational arithmetic (default).
    #[arg(long, global = true, conflicts_with = "approx")]
    pub exact: bool,
    /// Binary floating point with relative tolerances.
    #[arg(long, global = true)]
    pub approx: bool,
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub epsilon: f64,
    #[arg(long = "epsilon-deg", global = true, default_value_t = 1e-9)]
    pub epsilon_deg: f64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 1000)]
    pub trials: usize,
    /// Output file (stdout when omitted).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Human)]
    pub format: OutputFormat,
    /// Include timings in records and summaries.
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the altitudes of a triangle document.
    Classify {
        /// JSON file, or `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Classify a pair of lines.
    Pair {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Compare the cycle engine against the Euclidean oracle on random triangles.
    Fuzz,
    /// Draw a triangle or line-pair case as SVG.
    Svg {
        #[arg(default_value = "-")]
        input: String,
    },
}

impl Cli {
    pub fn config(&self) -> RunConfig {
        RunConfig {
            mode: if self.approx { Mode::Approximate } else { Mode::Exact },
            tolerance: Tolerance::new(self.epsilon, self.epsilon_deg),
            seed: self.seed,
            trials: self.trials,
            out: self.out.clone(),
            output: self.format,
            timings: self.timings,
        }
    }
}

pub fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))
    }
}

/// Output text and exit status of one invocation.
pub struct Outcome {
    pub text: String,
    pub status: i32,
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let config = cli.config();
    config.validate()?;
    match &cli.command {
        Command::Classify { input } => {
            let text = read_input(input)?;
            let rec = record::cmd_classify(&config, &text)?;
            Ok(Outcome { text: rec.render(config.output)?, status: 0 })
        }
        Command::Pair { input } => {
            let text = read_input(input)?;
            let rec = record::cmd_pair(&config, &text)?;
            Ok(Outcome { text: rec.render(config.output)?, status: 0 })
        }
        Command::Fuzz => {
            let summary = fuzz::cmd_fuzz(&config);
            let status = if summary.passed() { 0 } else { EXIT_FUZZ_FAILURE };
            Ok(Outcome { text: summary.render(config.output)?, status })
        }
        Command::Svg { input } => {
            let text = read_input(input)?;
            let doc = svg::cmd_svg(&config, &text)?;
            Ok(Outcome { text: doc, status: 0 })
        }
    }
}

/// Write to `--out` or stdout.
pub fn emit(config: &RunConfig, text: &str) -> Result<(), CliError> {
    match &config.out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
