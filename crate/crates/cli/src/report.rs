use std::io::Write;

use gamma_ratio::expansion::EvaluationResult;
use gamma_ratio::validation::{CheckOutcome, GridRow};
use serde::Serialize;

use crate::config::OutputFormat;
use crate::CliError;

/// Shortest decimal that parses back to the same `f64`.
pub fn format_float(x: f64) -> String {
    format!("{x:?}")
}

/// Echo of the inputs that produced a report.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ParamsRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_grid: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order_cap: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl ParamsRecord {
    fn human_line(&self) -> String {
        let mut parts = Vec::new();
        let list = |xs: &[f64]| {
            xs.iter()
                .map(|&x| format_float(x))
                .collect::<Vec<_>>()
                .join(",")
        };
        if let Some(p) = self.p {
            parts.push(format!("p={p}"));
        }
        if let Some(a) = &self.a {
            parts.push(format!("a={}", list(a)));
        }
        if let Some(b) = &self.b {
            parts.push(format!("b={}", list(b)));
        }
        if let Some(s) = self.s {
            parts.push(format!("s={}", format_float(s)));
        }
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        if let Some(grid) = &self.n_grid {
            parts.push(format!(
                "n_grid={}",
                grid.iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            ));
        }
        if let Some(m) = self.order {
            parts.push(format!("M={m}"));
        }
        if let Some(cap) = self.order_cap {
            parts.push(format!("M_cap={cap}"));
        }
        if let Some(k) = self.k_max {
            parts.push(format!("K={k}"));
        }
        if let Some(seed) = self.seed {
            parts.push(format!("seed={seed}"));
        }
        format!("# {}", parts.join(" "))
    }
}

/// A row type with a fixed column set.
pub trait Row: Serialize {
    const COLUMNS: &'static [&'static str];
    fn cells(&self) -> Vec<String>;
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalRow {
    pub series: f64,
    pub oracle: f64,
    pub abs_error: f64,
    pub rel_error: f64,
    pub error_estimate: f64,
    pub m_used: usize,
    pub terminated: bool,
}

impl EvalRow {
    pub fn new(result: &EvaluationResult, oracle: f64) -> Self {
        let abs_error = (result.value - oracle).abs();
        Self {
            series: result.value,
            oracle,
            abs_error,
            rel_error: abs_error / oracle.abs(),
            error_estimate: result.error_estimate,
            m_used: result.m_used,
            terminated: result.terminated,
        }
    }
}

impl Row for EvalRow {
    const COLUMNS: &'static [&'static str] = &[
        "series",
        "oracle",
        "abs_error",
        "rel_error",
        "error_estimate",
        "m_used",
        "terminated",
    ];

    fn cells(&self) -> Vec<String> {
        vec![
            format_float(self.series),
            format_float(self.oracle),
            format_float(self.abs_error),
            format_float(self.rel_error),
            format_float(self.error_estimate),
            self.m_used.to_string(),
            self.terminated.to_string(),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoeffRow {
    pub k: usize,
    pub a_k: f64,
}

impl Row for CoeffRow {
    const COLUMNS: &'static [&'static str] = &["k", "a_k"];

    fn cells(&self) -> Vec<String> {
        vec![self.k.to_string(), format_float(self.a_k)]
    }
}

impl Row for GridRow {
    const COLUMNS: &'static [&'static str] = &["n", "oracle", "series", "abs_error"];

    fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            format_float(self.oracle),
            format_float(self.series),
            format_float(self.abs_error),
        ]
    }
}

impl Row for CheckOutcome {
    const COLUMNS: &'static [&'static str] = &["name", "passed", "detail"];

    fn cells(&self) -> Vec<String> {
        vec![
            self.name.clone(),
            self.passed.to_string(),
            self.detail.clone(),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report<R> {
    pub params: ParamsRecord,
    pub rows: Vec<R>,
    pub fitted_order: Option<f64>,
}

fn write_csv<W: Write>(
    out: W,
    columns: &[&str],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> Result<(), CliError> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(columns)?;
    for row in rows {
        writer.write_record(&row)?;
    }
    writer.flush()?;
    Ok(())
}

fn write_table<W: Write>(
    out: &mut W,
    columns: &[&str],
    rows: &[Vec<String>],
) -> Result<(), CliError> {
    let mut widths: Vec<usize> = columns.iter().map(|c| c.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut line = |cells: &[String]| -> std::io::Result<()> {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        writeln!(out, "{}", padded.join("  ").trim_end())
    };
    line(&columns.iter().map(|c| c.to_string()).collect::<Vec<_>>())?;
    for row in rows {
        line(row)?;
    }
    Ok(())
}

/// Single-row reports print one `name value` pair per line.
fn write_pairs<W: Write>(out: &mut W, columns: &[&str], row: &[String]) -> Result<(), CliError> {
    let width = columns.iter().map(|c| c.len()).max().unwrap_or(0);
    for (name, value) in columns.iter().zip(row) {
        writeln!(out, "{name:<width$}  {value}")?;
    }
    Ok(())
}

impl<R: Row> Report<R> {
    /// Writes the report. CSV carries only the rows; the fitted order, when
    /// present, goes to `side` as `fitted_order=<x>`.
    pub fn emit<W: Write, E: Write>(
        &self,
        format: OutputFormat,
        out: &mut W,
        side: &mut E,
    ) -> Result<(), CliError> {
        let cells: Vec<Vec<String>> = self.rows.iter().map(Row::cells).collect();
        match format {
            OutputFormat::Json => {
                serde_json::to_writer(&mut *out, self)?;
                writeln!(out)?;
            }
            OutputFormat::Csv => {
                write_csv(&mut *out, R::COLUMNS, cells)?;
                if let Some(x) = self.fitted_order {
                    writeln!(side, "fitted_order={}", format_float(x))?;
                }
            }
            OutputFormat::Human => {
                writeln!(out, "{}", self.params.human_line())?;
                if let [row] = cells.as_slice() {
                    write_pairs(out, R::COLUMNS, row)?;
                } else {
                    write_table(out, R::COLUMNS, &cells)?;
                }
                if let Some(x) = self.fitted_order {
                    writeln!(out, "fitted_order  {}", format_float(x))?;
                }
            }
        }
        Ok(())
    }
}

/// The `order-fit` output: the fitted order and nothing else (JSON keeps the
/// common envelope with no rows).
pub fn emit_fitted_order<W: Write>(
    params: ParamsRecord,
    fitted_order: f64,
    format: OutputFormat,
    out: &mut W,
) -> Result<(), CliError> {
    match format {
        OutputFormat::Human => writeln!(out, "{}", format_float(fitted_order))?,
        OutputFormat::Csv => write_csv(out, &["fitted_order"], [vec![format_float(fitted_order)]])?,
        OutputFormat::Json => {
            let report: Report<CoeffRow> = Report {
                params,
                rows: Vec::new(),
                fitted_order: Some(fitted_order),
            };
            serde_json::to_writer(&mut *out, &report)?;
            writeln!(out)?;
        }
    }
    Ok(())
}
