//! Report rows and their text, JSON and CSV renderings.

use std::fmt::Write as _;

use indexmap::IndexMap;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    TotientTable,
    OrderTable,
    Trace,
    Coset,
    Progression,
    Congruence,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Violated,
    Error,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Violated => "violated",
            Status::Error => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Int(u128),
    Signed(i128),
    Text(String),
    List(Vec<u64>),
    Groups(Vec<Vec<u64>>),
}

impl Value {
    fn is_numeric(&self) -> bool {
        matches!(self, Value::Int(_) | Value::Signed(_))
    }

    fn render_text(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Signed(v) => v.to_string(),
            Value::Text(s) => s.clone(),
            Value::List(items) => join(items, " "),
            Value::Groups(groups) => groups
                .iter()
                .map(|g| format!("{{{}}}", join(g, ",")))
                .collect::<Vec<_>>()
                .join(" | "),
        }
    }
}

fn join(items: &[u64], sep: &str) -> String {
    items
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(u128::from(v))
    }
}

impl From<u128> for Value {
    fn from(v: u128) -> Self {
        Value::Int(v)
    }
}

impl From<i128> for Value {
    fn from(v: i128) -> Self {
        Value::Signed(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl From<Vec<u64>> for Value {
    fn from(v: Vec<u64>) -> Self {
        Value::List(v)
    }
}

impl From<&[u64]> for Value {
    fn from(v: &[u64]) -> Self {
        Value::List(v.to_vec())
    }
}

impl From<Vec<Vec<u64>>> for Value {
    fn from(v: Vec<Vec<u64>>) -> Self {
        Value::Groups(v)
    }
}

/// One result line: what was asked, what came back, and whether a theorem
/// check found a counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub kind: Kind,
    pub inputs: IndexMap<String, Value>,
    pub outputs: IndexMap<String, Value>,
    pub status: Status,
}

impl ReportRow {
    pub fn new(kind: Kind) -> Self {
        Self {
            kind,
            inputs: IndexMap::new(),
            outputs: IndexMap::new(),
            status: Status::Ok,
        }
    }

    pub fn input(mut self, name: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(name.to_string(), value.into());
        self
    }

    pub fn output(mut self, name: &str, value: impl Into<Value>) -> Self {
        self.outputs.insert(name.to_string(), value.into());
        self
    }

    pub fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    fn columns(&self) -> Vec<&str> {
        self.inputs
            .keys()
            .chain(self.outputs.keys())
            .map(String::as_str)
            .collect()
    }

    fn cell(&self, column: &str) -> Option<&Value> {
        self.inputs.get(column).or_else(|| self.outputs.get(column))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

pub fn render(rows: &[ReportRow], format: Format) -> String {
    match format {
        Format::Text => render_text(rows),
        Format::Json => render_json(rows),
        Format::Csv => render_csv(rows),
    }
}

/// Aligned tables; consecutive rows sharing kind and columns form one block.
fn render_text(rows: &[ReportRow]) -> String {
    let mut out = String::new();
    let mut start = 0;
    while start < rows.len() {
        let columns = rows[start].columns();
        let kind = rows[start].kind;
        let end = rows[start..]
            .iter()
            .position(|r| r.kind != kind || r.columns() != columns)
            .map_or(rows.len(), |offset| start + offset);
        if start > 0 {
            out.push('\n');
        }
        text_block(&mut out, &rows[start..end], &columns, kind == Kind::Verify);
        start = end;
    }
    out
}

fn text_block(out: &mut String, rows: &[ReportRow], columns: &[&str], with_status: bool) {
    let mut header: Vec<String> = columns.iter().map(|c| c.to_string()).collect();
    let mut numeric: Vec<bool> = columns
        .iter()
        .map(|c| {
            rows.iter()
                .all(|r| r.cell(c).is_some_and(Value::is_numeric))
        })
        .collect();
    let mut body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            columns
                .iter()
                .map(|c| r.cell(c).map(Value::render_text).unwrap_or_default())
                .collect()
        })
        .collect();
    if with_status {
        header.push("status".to_string());
        numeric.push(false);
        for (line, row) in body.iter_mut().zip(rows) {
            line.push(row.status.as_str().to_string());
        }
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|i| {
            body.iter()
                .map(|line| line[i].chars().count())
                .chain([header[i].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    for line in std::iter::once(&header).chain(body.iter()) {
        let last = line.len() - 1;
        let mut text = String::new();
        for (i, cell) in line.iter().enumerate() {
            if i > 0 {
                text.push_str("  ");
            }
            let pad = widths[i] - cell.chars().count();
            if numeric[i] {
                text.push_str(&" ".repeat(pad));
                text.push_str(cell);
            } else if i == last {
                text.push_str(cell);
            } else {
                text.push_str(cell);
                text.push_str(&" ".repeat(pad));
            }
        }
        out.push_str(text.trim_end());
        out.push('\n');
    }
}

fn render_json(rows: &[ReportRow]) -> String {
    let mut out = String::new();
    for row in rows {
        let line = serde_json::to_string(row).expect("report rows always serialize");
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// CSV with one header row; columns are the union of all row keys in
/// first-seen order.
fn render_csv(rows: &[ReportRow]) -> String {
    let mut columns: Vec<&str> = Vec::new();
    for row in rows {
        for c in row.columns() {
            if !columns.contains(&c) {
                columns.push(c);
            }
        }
    }
    let mut out = String::new();
    let header: Vec<&str> = std::iter::once("kind")
        .chain(columns.iter().copied())
        .chain(["status"])
        .collect();
    out.push_str(
        &header
            .iter()
            .map(|h| csv_field(h))
            .collect::<Vec<_>>()
            .join(","),
    );
    out.push('\n');
    for row in rows {
        let kind = serde_json::to_value(row.kind).expect("kind serializes");
        let mut fields = vec![kind.as_str().unwrap_or_default().to_string()];
        for c in &columns {
            fields.push(csv_field(
                &row.cell(c).map(Value::render_text).unwrap_or_default(),
            ));
        }
        fields.push(row.status.as_str().to_string());
        let _ = writeln!(out, "{}", fields.join(","));
    }
    out
}

fn csv_field(raw: &str) -> String {
    if raw.contains([',', '"', '\n']) {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}
