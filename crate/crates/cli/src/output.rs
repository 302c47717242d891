use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde_json::{Map, Number, Value};

use crate::args::Format;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn to_field(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format_float(*v),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Float(v) => Number::from_f64(*v).map(Value::Number).unwrap_or(Value::Null),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Bool(b) => Value::Bool(*b),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v.into())
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

/// Shortest round-trip representation; `NaN`, `inf`, `-inf` spelled out.
pub fn format_float(v: f64) -> String {
    if v.is_nan() {
        "NaN".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{v:e}")
    }
}

/// Ordered `key = value` lines written before the data.
#[derive(Debug, Clone, Default)]
pub struct Header {
    pub entries: Vec<(String, String)>,
}

impl Header {
    pub fn new(command: &str) -> Self {
        let mut h = Self::default();
        h.push("command", command);
        h.push("version", env!("CARGO_PKG_VERSION"));
        h
    }

    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    pub fn push_float(&mut self, key: &str, value: f64) {
        self.push(key, format_float(value));
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// CSV: `# key = value` lines, then the column row and data.
/// JSON lines: a `{"header": {...}}` record, then one object per row.
pub fn write_table<W: Write>(mut w: W, format: Format, header: &Header, table: &Table) -> io::Result<()> {
    match format {
        Format::Csv => {
            for (k, v) in &header.entries {
                writeln!(w, "# {k} = {v}")?;
            }
            let mut csv = csv::Writer::from_writer(w);
            csv.write_record(&table.columns).map_err(csv_io)?;
            for row in &table.rows {
                csv.write_record(row.iter().map(Cell::to_field)).map_err(csv_io)?;
            }
            csv.flush()?;
        }
        Format::JsonLines => {
            let mut h = Map::new();
            for (k, v) in &header.entries {
                h.insert(k.clone(), Value::String(v.clone()));
            }
            let mut top = Map::new();
            top.insert("header".into(), Value::Object(h));
            writeln!(w, "{}", Value::Object(top))?;
            for row in &table.rows {
                let mut obj = Map::new();
                for (c, cell) in table.columns.iter().zip(row) {
                    obj.insert((*c).to_string(), cell.to_json());
                }
                writeln!(w, "{}", Value::Object(obj))?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn csv_io(e: csv::Error) -> io::Error {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => e,
        other => io::Error::other(format!("{other:?}")),
    }
}

pub fn emit(path: Option<&Path>, format: Format, header: &Header, table: &Table) -> io::Result<()> {
    match path {
        Some(p) => write_table(BufWriter::new(File::create(p)?), format, header, table),
        None => write_table(io::stdout().lock(), format, header, table),
    }
}
