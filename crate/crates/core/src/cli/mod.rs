//! Scenario ingestion, comparison reports, benchmarking and the `fuse`
//! command line.
//!
//! Exit codes: `0` on success, `2` for file, parse and validation errors,
//! `3` when a rule is undefined on valid input (empty MURR core, total
//! conflict under Dempster).

pub mod bench;
pub mod report;
pub mod scenario;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::fusion::{FusionError, Rule};
use crate::lattice::{enumerate_hyper_power_set, EmptinessMode, Frame, LatticeError};

pub use bench::{run_bench, BenchConfig, BenchError, BenchSummary};
pub use report::ComparisonReport;
pub use scenario::{load_scenario, LoadedScenario, Scenario, ScenarioError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Scenario(#[from] ScenarioError),
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error(transparent)]
    Bench(#[from] BenchError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("no rules requested")]
    NoRules,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Fusion(e) if e.is_domain_error() => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Declared,
    Propagated,
}

impl From<ModeArg> for EmptinessMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Declared => EmptinessMode::Declared,
            ModeArg::Propagated => EmptinessMode::Propagated,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "fuse",
    version,
    about = "Combine belief assignments over hyper-power sets"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Combine a scenario's sources with one rule.
    Combine {
        #[arg(long)]
        scenario: PathBuf,
        #[arg(long, value_parser = parse_rule)]
        rule: Rule,
        #[arg(long, value_enum)]
        emptiness: Option<ModeArg>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Run several rules on a scenario side by side.
    Compare {
        #[arg(long)]
        scenario: PathBuf,
        /// Comma-separated rule names.
        #[arg(long, value_delimiter = ',', value_parser = parse_rule)]
        rules: Vec<Rule>,
        #[arg(long, value_enum)]
        emptiness: Option<ModeArg>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Time every rule on seeded random scenarios.
    Bench {
        #[arg(long)]
        atoms: usize,
        #[arg(long)]
        focals: usize,
        #[arg(long, default_value_t = 2)]
        sources: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List every element of the hyper-power set of an alphabetic frame.
    Enumerate {
        #[arg(long)]
        atoms: usize,
    },
}

fn parse_rule(s: &str) -> Result<Rule, String> {
    s.trim().parse()
}

/// Single-rule report.
pub fn run_combine(
    scenario_path: &Path,
    rule: Rule,
    emptiness_override: Option<EmptinessMode>,
) -> Result<ComparisonReport, CliError> {
    run_compare_with(scenario_path, &[rule], emptiness_override)
}

/// Multi-rule report, using the scenario's own emptiness mode.
pub fn run_compare(scenario_path: &Path, rules: &[Rule]) -> Result<ComparisonReport, CliError> {
    run_compare_with(scenario_path, rules, None)
}

pub fn run_compare_with(
    scenario_path: &Path,
    rules: &[Rule],
    emptiness_override: Option<EmptinessMode>,
) -> Result<ComparisonReport, CliError> {
    if rules.is_empty() {
        return Err(CliError::NoRules);
    }
    let scenario = load_scenario(scenario_path, emptiness_override)?;
    Ok(ComparisonReport::build(&scenario, rules)?)
}

fn render(report: &ComparisonReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => report.render_table(),
        OutputFormat::Json => report.render_json() + "\n",
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let text = match cli.command {
        Command::Combine {
            scenario,
            rule,
            emptiness,
            format,
        } => {
            let report = run_combine(&scenario, rule, emptiness.map(Into::into))?;
            if let Some(err) = report.first_error() {
                return Err(err.clone().into());
            }
            render(&report, format)
        }
        Command::Compare {
            scenario,
            rules,
            emptiness,
            format,
        } => {
            let report = run_compare_with(&scenario, &rules, emptiness.map(Into::into))?;
            let text = render(&report, format);
            if let Some(err) = report.first_error() {
                let _ = out.write_all(text.as_bytes());
                eprintln!("error: {err}");
                return Ok(3);
            }
            text
        }
        Command::Bench {
            atoms,
            focals,
            sources,
            trials,
            seed,
        } => run_bench(BenchConfig {
            atoms,
            focals,
            sources,
            trials,
            seed,
        })?
        .render_table(),
        Command::Enumerate { atoms } => {
            let frame = Frame::alphabetic(atoms)?;
            let all = enumerate_hyper_power_set(&frame)?;
            let mut text = format!("{} elements\n", all.len());
            for p in all {
                text.push_str(&p.to_string());
                text.push('\n');
            }
            text
        }
    };
    let _ = out.write_all(text.as_bytes());
    Ok(0)
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match execute(cli, &mut lock) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
