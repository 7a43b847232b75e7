//! Command-line front-end: `eval`, `coeffs`, `convergence`, `order-fit` and
//! `validate`, each with human, CSV or JSON output.

pub mod config;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;
use gamma_ratio::coefficients::CoefficientTable;
use gamma_ratio::expansion::{evaluate, optimal_truncation};
use gamma_ratio::kernels::oracle_ratio;
use gamma_ratio::validation::{convergence_scan, run_suite, CheckOutcome};
use thiserror::Error;

pub use config::{
    parse_n_grid, parse_parameters, parse_real_list, Cli, OutputFormat, RunConfig, Task, Truncation,
};
use report::{emit_fitted_order, CoeffRow, EvalRow, ParamsRecord, Report};

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_VALIDATION_FAILED: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{}", .0.trim_end())]
    Clap(String),

    #[error(transparent)]
    Core(#[from] gamma_ratio::Error),

    #[error("output: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),

    #[error("json output: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Clap(_) | CliError::Core(_) => EXIT_PRECONDITION,
            CliError::Io(_) | CliError::Csv(_) | CliError::Json(_) => EXIT_IO,
        }
    }

    /// The diagnostic collapsed onto one line.
    pub fn one_line(&self) -> String {
        self.to_string()
            .split_whitespace()
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn params_record(config: &RunConfig) -> ParamsRecord {
    let params = &config.params;
    let mut record = ParamsRecord {
        p: Some(params.p()),
        a: Some(params.a().to_vec()),
        b: Some(params.b().to_vec()),
        s: Some(params.s()),
        ..Default::default()
    };
    match &config.task {
        Task::Eval { n, truncation } => {
            record.n = Some(*n);
            match truncation {
                Truncation::Fixed(m) => record.order = Some(*m),
                Truncation::OptimalUpTo(cap) => record.order_cap = Some(*cap),
            }
        }
        Task::Coeffs { k_max } => record.k_max = Some(*k_max),
        Task::Convergence { n_grid, order } | Task::OrderFit { n_grid, order } => {
            record.n_grid = Some(n_grid.clone());
            record.order = Some(*order);
        }
        Task::Validate { seed } => {
            record = ParamsRecord {
                seed: Some(*seed),
                ..Default::default()
            };
        }
    }
    record
}

/// Executes one configured command. Reports go to `out`; CSV side output
/// (the fitted order) goes to `side`. Returns the process exit code.
pub fn run<W: Write, E: Write>(
    config: &RunConfig,
    out: &mut W,
    side: &mut E,
) -> Result<i32, CliError> {
    let params = &config.params;
    let record = params_record(config);
    match &config.task {
        Task::Eval { n, truncation } => {
            // the oracle goes first so that a gamma pole is reported by name
            let oracle = oracle_ratio(params, *n)?;
            let result = match truncation {
                Truncation::Fixed(m) => evaluate(params, *n, *m)?,
                Truncation::OptimalUpTo(cap) => optimal_truncation(params, *n, *cap)?,
            };
            let report = Report {
                params: record,
                rows: vec![EvalRow::new(&result, oracle)],
                fitted_order: None,
            };
            report.emit(config.format, out, side)?;
        }
        Task::Coeffs { k_max } => {
            let table = CoefficientTable::new(params, *k_max)?;
            let rows = table
                .values
                .iter()
                .enumerate()
                .map(|(k, &a_k)| CoeffRow { k, a_k })
                .collect();
            Report {
                params: record,
                rows,
                fitted_order: None,
            }
            .emit(config.format, out, side)?;
        }
        Task::Convergence { n_grid, order } => {
            let scan = convergence_scan(params, *order, n_grid)?;
            Report {
                params: record,
                rows: scan.grid,
                fitted_order: Some(scan.fitted_order),
            }
            .emit(config.format, out, side)?;
        }
        Task::OrderFit { n_grid, order } => {
            let scan = convergence_scan(params, *order, n_grid)?;
            emit_fitted_order(record, scan.fitted_order, config.format, out)?;
        }
        Task::Validate { seed } => {
            let outcomes = run_suite(*seed);
            let code = suite_exit_code(&outcomes);
            if config.format == OutputFormat::Human {
                writeln!(out, "{}", record_line(*seed))?;
                for o in &outcomes {
                    writeln!(
                        out,
                        "{} {}: {}",
                        if o.passed { "PASS" } else { "FAIL" },
                        o.name,
                        o.detail
                    )?;
                }
            } else {
                Report {
                    params: record,
                    rows: outcomes,
                    fitted_order: None,
                }
                .emit(config.format, out, side)?;
            }
            return Ok(code);
        }
    }
    Ok(EXIT_SUCCESS)
}

/// `EXIT_VALIDATION_FAILED` when any check failed.
pub fn suite_exit_code(outcomes: &[CheckOutcome]) -> i32 {
    if outcomes.iter().all(|o| o.passed) {
        EXIT_SUCCESS
    } else {
        EXIT_VALIDATION_FAILED
    }
}

fn record_line(seed: u64) -> String {
    format!("# seed={seed}")
}

/// Parses `args` (program name first), runs, and reports errors as a single
/// line on `err`. Returns the exit code.
pub fn main_with_args<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_SUCCESS
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_PRECONDITION
                }
            };
        }
    };
    let outcome = RunConfig::from_cli(cli).and_then(|config| run(&config, out, err));
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.one_line());
            e.exit_code()
        }
    }
}
