//! The `zngraded` command line: partition dumps, orbit sums, cumulant and
//! transform conversions over JSON, algebra queries and verification suites.
//!
//! Exit codes: 0 when everything asserted holds, 1 when a verification finds
//! a violation, 2 for usage errors, malformed input or unmet hypotheses.

mod commands;
mod report;
mod suites;

use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use report::{render_csv, render_json, render_pretty, InstanceResult, Mode, VerificationReport};
pub use suites::{run_suite, suite_ids, RunConfig, SUITES};

use crate::cyclo::CycloNum;

/// Largest ground set the enumeration commands accept by default.
pub const DEFAULT_CEILING: usize = 12;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Parser)]
#[command(name = "zngraded", version, about = "Exact checks for Z_n-graded independence")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
}

#[derive(Debug, Args, Clone)]
pub struct Params {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// `1`, `0`, `p/q` or `zeta:N:K`.
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Truncation order.
    #[arg(long = "K", default_value_t = 12)]
    pub truncation: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    /// Word length for the independence checks.
    #[arg(long, default_value_t = 4)]
    pub depth: usize,
}

impl Params {
    pub fn q(&self) -> Result<Option<CycloNum>, CliError> {
        self.q.as_deref().map(parse_q).transpose()
    }

    pub fn config(&self) -> Result<RunConfig, CliError> {
        if self.truncation == 0 {
            return Err(CliError::Usage("--K must be at least 1".into()));
        }
        Ok(RunConfig {
            n: self.n,
            m: self.m,
            q: self.q()?,
            truncation: self.truncation,
            seed: self.seed,
            trials: self.trials,
            depth: self.depth,
        })
    }
}

pub fn parse_q(s: &str) -> Result<CycloNum, CliError> {
    s.parse()
        .map_err(|e| CliError::Usage(format!("bad q {s:?}: {e}")))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List set partitions of [N] with their crossing statistics.
    Partitions(commands::PartitionsArgs),
    /// Σ q^{c0(P)} over P_n[mn], with the block-aligned count.
    Sums(commands::SumsArgs),
    /// Moment/cumulant conversion on JSON arrays read from stdin.
    Cumulants {
        #[command(subcommand)]
        command: commands::CumulantsCommand,
    },
    /// Transforms of a JSON moment array read from stdin.
    Series(commands::SeriesArgs),
    /// Queries on algebra models read as JSON from stdin.
    Algebra(commands::AlgebraArgs),
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        #[command(flatten)]
        params: Params,
    },
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cli.global.workers {
        if w == 0 {
            let _ = writeln!(stderr, "error: --workers must be at least 1");
            return 2;
        }
        pool = pool.num_threads(w);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let start = Instant::now();
    let input = match &cli.command {
        Command::Cumulants { .. } | Command::Series(_) | Command::Algebra(_) => match read_json(stdin) {
            Ok(v) => Some(v),
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                return 2;
            }
        },
        _ => None,
    };
    let result = pool.install(|| dispatch(&cli, input));
    match result {
        Ok((text, code)) => {
            if stdout.write_all(text.as_bytes()).is_err() {
                return 2;
            }
            let _ = writeln!(stderr, "wall time: {:.3}s", start.elapsed().as_secs_f64());
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli, input: Option<serde_json::Value>) -> Result<(String, i32), CliError> {
    let format = cli.global.format;
    let input = || input.clone().unwrap_or_default();
    match &cli.command {
        Command::Partitions(a) => commands::partitions(a, format.unwrap_or(Format::Csv)).map(|s| (s, 0)),
        Command::Sums(a) => commands::sums(a, format.unwrap_or(Format::Pretty)),
        Command::Cumulants { command } => commands::cumulants(command, input()).map(|s| (s, 0)),
        Command::Series(a) => commands::series(a, input()).map(|s| (s, 0)),
        Command::Algebra(a) => commands::algebra(a, input(), format.unwrap_or(Format::Json)),
        Command::Verify { suite, params } => {
            let reports = run_suite(suite, &params.config()?)?;
            let code = if reports.iter().any(VerificationReport::is_violation) { 1 } else { 0 };
            let text = match format.unwrap_or(Format::Pretty) {
                Format::Json => render_json(&reports),
                Format::Csv => render_csv(&reports),
                Format::Pretty => render_pretty(&reports),
            };
            Ok((text, code))
        }
    }
}

fn read_json(stdin: &mut dyn Read) -> Result<serde_json::Value, CliError> {
    let mut s = String::new();
    stdin.read_to_string(&mut s)?;
    serde_json::from_str(&s).map_err(|e| CliError::Malformed(e.to_string()))
}
