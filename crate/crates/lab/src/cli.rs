//! Argument parsing and dispatch.
//!
//! Exit status: 0 when every check passes, 1 on a failed check or a
//! computation error, 2 on unparseable input.

use clap::{Parser, Subcommand};

use crate::commands::{self, is_usage_error, Method, UsageError};
use crate::json::to_canonical_string;
use crate::report::Report;
use crate::suites::{self, Suite};

pub const PRECISION_VAR: &str = "COXETER_LAB_PRECISION";

#[derive(Parser, Debug)]
#[command(name = "coxeter-lab", version, about = "Coxeter transformations, McKay graphs and Poincaré series")]
pub struct Cli {
    /// Emit the canonical JSON report instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the randomized character-table construction.
    #[arg(long, global = true, default_value_t = coxeter_core::mckay::DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cartan data, Coxeter transformation, spectra and Jordan form.
    Analyze { diagram: String },
    /// Characteristic polynomial of the Coxeter transformation.
    Charpoly {
        diagram: String,
        #[arg(long, default_value = "direct")]
        method: String,
    },
    /// Root system of a Dynkin diagram.
    Roots { diagram: String },
    /// Character table and McKay matrix of a finite subgroup of SU(2).
    Mckay { group: String },
    /// Slodowy matrices of a pair H ◁ G.
    Slodowy { pair: String },
    /// Kostant generating function of a group or pair.
    Poincare {
        target: String,
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, default_value_t = 20)]
        series: usize,
    },
    /// Run a verification suite: ebeling, folding, kostant, mckay, slodowy,
    /// jordan, affine or all.
    Verify { suite: String },
    /// List the named diagrams.
    Catalog,
}

/// Only 64-bit floats are implemented.
pub fn check_precision(value: Option<&str>) -> Result<(), UsageError> {
    match value {
        None | Some("64") => Ok(()),
        Some(other) => Err(UsageError(format!(
            "{PRECISION_VAR}={other} is not supported; only 64 is implemented"
        ))),
    }
}

fn dispatch(cli: &Cli) -> anyhow::Result<Report> {
    match &cli.command {
        Command::Analyze { diagram } => commands::analyze(diagram),
        Command::Charpoly { diagram, method } => commands::charpoly(diagram, Method::parse(method)?),
        Command::Roots { diagram } => commands::roots(diagram),
        Command::Mckay { group } => commands::mckay(group, cli.seed),
        Command::Slodowy { pair } => commands::slodowy(pair, cli.seed),
        Command::Poincare { target, kind, series } => {
            let kind = kind.as_deref().map(commands::parse_kind).transpose()?;
            commands::poincare(target, kind, *series, cli.seed)
        }
        Command::Verify { suite } => Ok(suites::verify(&Suite::parse(suite)?, cli.seed)),
        Command::Catalog => commands::catalog(),
    }
}

/// What the process should print and its exit status.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(argv: I, precision: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    if let Err(e) = check_precision(precision) {
        return Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: 2 };
    }
    match dispatch(&cli) {
        Ok(report) => {
            let stdout = if cli.json {
                to_canonical_string(&report.to_json()) + "\n"
            } else {
                report.to_table()
            };
            let code = if report.all_passed() { 0 } else { 1 };
            Outcome { stdout, stderr: String::new(), code }
        }
        Err(e) => {
            let code = if is_usage_error(&e) { 2 } else { 1 };
            Outcome { stdout: String::new(), stderr: format!("error: {e:#}\n"), code }
        }
    }
}
