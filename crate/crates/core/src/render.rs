//! Deterministic markdown / CSV / JSON rendering of integer tables.
//!
//! Big integers are written as decimal strings in JSON. JSON objects are emitted
//! with sorted keys so that parsing and re-serializing reproduces the output.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::coefficients::{CoefficientRow, DecompositionTable};
use crate::combinatorics::{EulerTable, HigherDerangementTable, PowerSeries};
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "markdown" | "md" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// A labelled, possibly ragged table of pre-formatted cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    /// Identifies the table in JSON output.
    pub name: String,
    pub index_label: String,
    /// Column label prefix; column `j` is `{prefix}{j}`. Ignored when `single_column` is set.
    pub column_prefix: String,
    /// Name of the only column, for one-value-per-row tables.
    pub single_column: Option<String>,
    /// Extra scalar fields for JSON output.
    pub params: Vec<(String, Value)>,
    pub rows: Vec<(u32, Vec<String>)>,
}

impl Grid {
    fn column_labels(&self) -> Vec<String> {
        if let Some(name) = &self.single_column {
            return vec![name.clone()];
        }
        let width = self.rows.iter().map(|(_, r)| r.len()).max().unwrap_or(0);
        (0..width)
            .map(|j| format!("{}{j}", self.column_prefix))
            .collect()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Markdown => self.markdown(),
            Format::Csv => self.csv(),
            Format::Json => self.json(),
        }
    }

    fn markdown(&self) -> String {
        let mut header = vec![self.index_label.clone()];
        header.extend(self.column_labels());
        let mut out = String::new();
        let _ = writeln!(out, "| {} |", header.join(" | "));
        let _ = writeln!(out, "|{}", "---|".repeat(header.len()));
        for (index, cells) in &self.rows {
            let _ = writeln!(out, "{}", markdown_row(*index, cells));
        }
        out
    }

    fn csv(&self) -> String {
        let mut header = vec![self.index_label.clone()];
        header.extend(self.column_labels());
        let mut out = header.join(",");
        out.push('\n');
        for (index, cells) in &self.rows {
            out.push_str(&csv_row(Some(*index), cells));
            out.push('\n');
        }
        out
    }

    fn json(&self) -> String {
        let mut obj = Map::new();
        obj.insert("table".into(), Value::String(self.name.clone()));
        for (key, value) in &self.params {
            obj.insert(key.clone(), value.clone());
        }
        let rows = self
            .rows
            .iter()
            .map(|(index, cells)| {
                json!({
                    self.index_label.clone(): index,
                    "values": cells,
                })
            })
            .collect();
        obj.insert("rows".into(), Value::Array(rows));
        to_json_text(&Value::Object(obj))
    }
}

/// `| 3 | 2 | 9 | 6 | 1 |`
pub fn markdown_row(index: u32, cells: &[String]) -> String {
    let mut parts = vec![index.to_string()];
    parts.extend(cells.iter().cloned());
    format!("| {} |", parts.join(" | "))
}

pub fn csv_row(index: Option<u32>, cells: &[String]) -> String {
    let mut parts: Vec<String> = index.map(|i| i.to_string()).into_iter().collect();
    parts.extend(cells.iter().cloned());
    parts.join(",")
}

/// Pretty JSON followed by a newline.
pub fn to_json_text(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn cells(values: &[BigInt]) -> Vec<String> {
    values.iter().map(BigInt::to_string).collect()
}

/// `p/q` in lowest terms; integers keep the `/1`.
pub fn rational_text(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn coefficient_grid(table: &DecompositionTable) -> Grid {
    Grid {
        name: "coefficients".into(),
        index_label: "k".into(),
        column_prefix: "c".into(),
        single_column: None,
        params: vec![("max_power".into(), json!(table.max_power))],
        rows: table.rows.iter().map(|r| (r.k, cells(&r.values))).collect(),
    }
}

pub fn render_table(table: &DecompositionTable, format: Format) -> String {
    coefficient_grid(table).render(format)
}

/// A single row. CSV is the bare value list, markdown a one-row table.
pub fn render_row(row: &CoefficientRow, format: Format) -> String {
    match format {
        Format::Csv => format!("{}\n", csv_row(None, &cells(&row.values))),
        Format::Markdown => Grid {
            name: "coefficients".into(),
            index_label: "k".into(),
            column_prefix: "c".into(),
            single_column: None,
            params: vec![],
            rows: vec![(row.k, cells(&row.values))],
        }
        .render(Format::Markdown),
        Format::Json => to_json_text(&json!({
            "table": "coefficient_row",
            "k": row.k,
            "values": cells(&row.values),
        })),
    }
}

pub fn euler_grid(table: &EulerTable) -> Grid {
    Grid {
        name: "euler".into(),
        index_label: "k".into(),
        column_prefix: "e".into(),
        single_column: None,
        params: vec![("max".into(), json!(table.max_index()))],
        rows: table
            .rows()
            .iter()
            .enumerate()
            .map(|(k, r)| (k as u32, cells(r)))
            .collect(),
    }
}

pub fn higher_grid(table: &HigherDerangementTable) -> Grid {
    Grid {
        name: "higher".into(),
        index_label: "n".into(),
        column_prefix: "d".into(),
        single_column: None,
        params: vec![("max".into(), json!(table.max_index()))],
        rows: table
            .rows()
            .iter()
            .enumerate()
            .map(|(n, r)| (n as u32, cells(r)))
            .collect(),
    }
}

pub fn derangement_grid(values: &[BigInt]) -> Grid {
    Grid {
        name: "derangement".into(),
        index_label: "k".into(),
        column_prefix: String::new(),
        single_column: Some("d".into()),
        params: vec![("max".into(), json!(values.len().saturating_sub(1)))],
        rows: values
            .iter()
            .enumerate()
            .map(|(k, d)| (k as u32, vec![d.to_string()]))
            .collect(),
    }
}

pub fn series_grid(series: &PowerSeries) -> Grid {
    Grid {
        name: "series".into(),
        index_label: "m".into(),
        column_prefix: String::new(),
        single_column: Some("coefficient".into()),
        params: vec![
            ("k".into(), json!(series.k)),
            ("order".into(), json!(series.order)),
        ],
        rows: series
            .coefficients
            .iter()
            .enumerate()
            .map(|(m, q)| (m as u32, vec![rational_text(q)]))
            .collect(),
    }
}
