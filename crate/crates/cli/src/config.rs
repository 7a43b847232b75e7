use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gamma_ratio::coefficients::MAX_ORDER;
use gamma_ratio::validation::{DEFAULT_SEED, DOUBLING_GRID};
use gamma_ratio::ParameterSet;

use crate::CliError;

/// Parameters used when `--a` and `--b` are omitted.
pub const DEFAULT_A: [f64; 3] = [0.3, 0.7, 1.1];
pub const DEFAULT_B: [f64; 2] = [0.9, 1.3];
pub const DEFAULT_ORDER: usize = 1;
pub const DEFAULT_K_MAX: usize = 10;

/// Largest accepted `--order`, `--order-cap` and `--k-max`. Coefficient
/// tables cost O(K^4) at p = 4, and orders this high are far past any useful
/// truncation of an asymptotic series.
pub const MAX_INDEX: usize = 100;

#[derive(Debug, Parser)]
#[command(
    name = "gamma-ratio",
    version,
    about = "Asymptotic expansion of gamma-function ratios"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Eval,
    Coeffs,
    Convergence,
    OrderFit,
    Validate,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Series value at one n, with the oracle and its error.
    Eval(Flags),
    /// Coefficient table A_k for k <= K.
    Coeffs(Flags),
    /// Series error against the oracle over an n grid, with the fitted order.
    Convergence(Flags),
    /// Fitted decay order only.
    OrderFit(Flags),
    /// Built-in property suite.
    Validate(Flags),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Human,
    Csv,
    Json,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// Numerator parameters a_1..a_{p+1}, comma separated
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Denominator parameters b_1..b_p, comma separated
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Evaluation point
    #[arg(long)]
    pub n: Option<u64>,
    /// Strictly increasing evaluation points, comma separated
    #[arg(long)]
    pub n_grid: Option<String>,
    /// Truncation order M
    #[arg(long, conflicts_with = "order_cap")]
    pub order: Option<usize>,
    /// Pick the truncation order by smallest next term, up to this cap
    #[arg(long)]
    pub order_cap: Option<usize>,
    /// Largest coefficient index K
    #[arg(long)]
    pub k_max: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
    /// Corpus seed for validate
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Truncation {
    Fixed(usize),
    OptimalUpTo(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Task {
    Eval { n: u64, truncation: Truncation },
    Coeffs { k_max: usize },
    Convergence { n_grid: Vec<u64>, order: usize },
    OrderFit { n_grid: Vec<u64>, order: usize },
    Validate { seed: u64 },
}

impl Task {
    pub fn kind(&self) -> CommandKind {
        match self {
            Task::Eval { .. } => CommandKind::Eval,
            Task::Coeffs { .. } => CommandKind::Coeffs,
            Task::Convergence { .. } => CommandKind::Convergence,
            Task::OrderFit { .. } => CommandKind::OrderFit,
            Task::Validate { .. } => CommandKind::Validate,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub params: ParameterSet,
    pub task: Task,
    pub format: OutputFormat,
}

/// Comma-separated finite decimals, e.g. `0.3,0.7,-1.1`.
pub fn parse_real_list(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|token| {
            let token = token.trim();
            match token.parse::<f64>() {
                Ok(x) if x.is_finite() => Ok(x),
                _ => Err(CliError::Usage(format!("not a finite number: {token:?}"))),
            }
        })
        .collect()
}

/// Comma-separated positive integers in strictly increasing order.
pub fn parse_n_grid(text: &str) -> Result<Vec<u64>, CliError> {
    let grid = text
        .split(',')
        .map(|token| {
            let token = token.trim();
            match token.parse::<u64>() {
                Ok(n) if n > 0 => Ok(n),
                _ => Err(CliError::Usage(format!(
                    "not a positive integer: {token:?}"
                ))),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Usage(
            "--n-grid must be strictly increasing".into(),
        ));
    }
    Ok(grid)
}

/// Builds the parameter set, inferring `p = len(b)`.
pub fn parse_parameters(a: &str, b: &str) -> Result<ParameterSet, CliError> {
    let a = parse_real_list(a)?;
    let b = parse_real_list(b)?;
    if a.len() != b.len() + 1 {
        return Err(CliError::Usage(format!(
            "--a needs exactly one more entry than --b (got {} and {})",
            a.len(),
            b.len()
        )));
    }
    if b.len() > MAX_ORDER {
        return Err(CliError::Usage(format!(
            "p = len(b) must be at most {MAX_ORDER} (got {})",
            b.len()
        )));
    }
    Ok(ParameterSet::new(a, b)?)
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let (kind, flags) = match cli.command {
            Command::Eval(f) => (CommandKind::Eval, f),
            Command::Coeffs(f) => (CommandKind::Coeffs, f),
            Command::Convergence(f) => (CommandKind::Convergence, f),
            Command::OrderFit(f) => (CommandKind::OrderFit, f),
            Command::Validate(f) => (CommandKind::Validate, f),
        };
        Self::from_flags(kind, flags)
    }

    pub fn from_flags(kind: CommandKind, flags: Flags) -> Result<Self, CliError> {
        let params = match (&flags.a, &flags.b) {
            (Some(a), Some(b)) => parse_parameters(a, b)?,
            (None, None) => ParameterSet::new(DEFAULT_A.to_vec(), DEFAULT_B.to_vec())?,
            _ => return Err(CliError::Usage("--a and --b must be given together".into())),
        };
        let n_grid = match &flags.n_grid {
            Some(text) => parse_n_grid(text)?,
            None => DOUBLING_GRID.to_vec(),
        };
        for (flag, value) in [
            ("--order", flags.order),
            ("--order-cap", flags.order_cap),
            ("--k-max", flags.k_max),
        ] {
            if value.is_some_and(|v| v > MAX_INDEX) {
                return Err(CliError::Usage(format!(
                    "{flag} must be at most {MAX_INDEX}"
                )));
            }
        }
        let order = flags.order.unwrap_or(DEFAULT_ORDER);
        let task = match kind {
            CommandKind::Eval => Task::Eval {
                n: flags
                    .n
                    .ok_or_else(|| CliError::Usage("eval needs --n".into()))?,
                truncation: match flags.order_cap {
                    Some(cap) => Truncation::OptimalUpTo(cap),
                    None => Truncation::Fixed(order),
                },
            },
            CommandKind::Coeffs => Task::Coeffs {
                k_max: flags.k_max.unwrap_or(DEFAULT_K_MAX),
            },
            CommandKind::Convergence => Task::Convergence { n_grid, order },
            CommandKind::OrderFit => Task::OrderFit { n_grid, order },
            CommandKind::Validate => Task::Validate {
                seed: flags.seed.unwrap_or(DEFAULT_SEED),
            },
        };
        Ok(Self {
            params,
            task,
            format: flags.format,
        })
    }

    /// Parses a full argument vector, program name first.
    pub fn try_from_args<I, T>(args: I) -> Result<Self, CliError>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args).map_err(|e| CliError::Clap(e.to_string()))?;
        Self::from_cli(cli)
    }
}
