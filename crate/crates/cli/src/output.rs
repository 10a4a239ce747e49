//! Table envelope shared by every subcommand, rendered as CSV or JSON.
//!
//! CSV layout:
//!
//! ```text
//! # command=pdf            <- provenance, omitted with --quiet
//! # n_at=2
//! alpha,count,probability  <- header, always present
//! 0,0,0.0000000000000000e0
//! ...
//! # slope=...              <- summary lines, always present
//! ```
//!
//! JSON carries the same data as `{"command", "parameters", "rows", "summary"}`
//! with `parameters` omitted under `--quiet`. Exact counts are strings in
//! both formats; reals are printed with 17 significant digits in CSV.

use std::io::{self, Write};

use serde_json::{Map, Value};

#[derive(Debug, Clone)]
pub enum Cell {
    /// Exact count, kept as its decimal string.
    Count(String),
    Int(u64),
    Real(f64),
    Bool(bool),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Count(s) | Cell::Text(s) => s.clone(),
            Cell::Int(v) => v.to_string(),
            Cell::Real(v) => fmt_real(*v),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Count(s) | Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(v) => Value::from(*v),
            Cell::Real(v) => Value::from(*v),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Empty => Value::Null,
        }
    }
}

pub fn fmt_real(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

pub struct Envelope {
    pub command: &'static str,
    pub parameters: Vec<(&'static str, Value)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub summary: Vec<(&'static str, Cell)>,
}

impl Envelope {
    pub fn new(command: &'static str, columns: &[&'static str]) -> Self {
        Envelope {
            command,
            parameters: Vec::new(),
            columns: columns.to_vec(),
            rows: Vec::new(),
            summary: Vec::new(),
        }
    }

    pub fn param(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.parameters.push((key, value.into()));
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format, quiet: bool, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Csv => self.render_csv(quiet, out),
            Format::Json => self.render_json(quiet, out),
        }
    }

    fn render_csv(&self, quiet: bool, out: &mut dyn Write) -> io::Result<()> {
        if !quiet {
            writeln!(out, "# command={}", self.command)?;
            for (k, v) in &self.parameters {
                let v = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                writeln!(out, "# {k}={v}")?;
            }
        }
        let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv))?;
        }
        out.write_all(&w.into_inner().map_err(|e| e.into_error())?)?;
        for (k, v) in &self.summary {
            writeln!(out, "# {k}={}", v.csv())?;
        }
        Ok(())
    }

    fn render_json(&self, quiet: bool, out: &mut dyn Write) -> io::Result<()> {
        let mut doc = Map::new();
        doc.insert("command".into(), Value::from(self.command));
        if !quiet {
            let params: Map<String, Value> =
                self.parameters.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
            doc.insert("parameters".into(), Value::Object(params));
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                Value::Object(
                    self.columns
                        .iter()
                        .zip(row)
                        .map(|(c, cell)| (c.to_string(), cell.json()))
                        .collect(),
                )
            })
            .collect();
        doc.insert("rows".into(), Value::Array(rows));
        if !self.summary.is_empty() {
            let summary: Map<String, Value> =
                self.summary.iter().map(|(k, v)| (k.to_string(), v.json())).collect();
            doc.insert("summary".into(), Value::Object(summary));
        }
        serde_json::to_writer_pretty(&mut *out, &Value::Object(doc))?;
        writeln!(out)
    }
}
