//! Result tables and their CSV/JSON encodings.
//!
//! Every command builds a [`Table`]: a versioned schema tag, a fixed column
//! list, and rows of [`Cell`]s. The CSV encoding writes the column names as
//! the header row and formats every number as `{:.17e}` so that identical
//! scenarios (and seeds) produce byte-identical files; the JSON encoding is
//! a single document `{"schema": ..., "columns": [...], "rows": [[...]]}`
//! with rows as arrays in column order.
//!
//! Tables are fully materialized before anything is written, so a failing
//! sweep never leaves a partial output file behind.

use std::io::Write;
use std::path::Path;

use crate::scenario::{OutputFormat, OutputSpec};

/// One table cell.
#[derive(Debug, Clone)]
pub enum Cell {
    /// Numeric value, emitted as `{:.17e}` in CSV and as a JSON number.
    Num(f64),
    /// Text value (labels, modes).
    Text(String),
    /// Not applicable for this row: empty CSV field, JSON null.
    Empty,
}

impl Cell {
    /// Text cell from a static label.
    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }
}

/// Versioned result table.
#[derive(Debug, Clone)]
pub struct Table {
    /// Schema tag, e.g. `vacprop.force/1`; also the first CSV column.
    pub schema: &'static str,
    /// Column names after the schema column.
    pub columns: &'static [&'static str],
    /// Rows; each must have `columns.len()` cells.
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    /// New empty table over a fixed column set.
    pub fn new(schema: &'static str, columns: &'static [&'static str]) -> Self {
        Table {
            schema,
            columns,
            rows: Vec::new(),
        }
    }

    /// Append a row, checking its width.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row width does not match column set of {}",
            self.schema
        );
        self.rows.push(row);
    }

    /// CSV bytes: header `schema,<columns...>`, one record per row.
    pub fn to_csv_bytes(&self) -> Vec<u8> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        let mut header = Vec::with_capacity(self.columns.len() + 1);
        header.push("schema");
        header.extend_from_slice(self.columns);
        writer.write_record(&header).expect("csv header");
        for row in &self.rows {
            let mut record = Vec::with_capacity(row.len() + 1);
            record.push(self.schema.to_string());
            for cell in row {
                record.push(match cell {
                    Cell::Num(x) => format!("{x:.17e}"),
                    Cell::Text(s) => s.clone(),
                    Cell::Empty => String::new(),
                });
            }
            writer.write_record(&record).expect("csv record");
        }
        writer.into_inner().expect("csv flush")
    }

    /// JSON bytes: one pretty-printed document with rows as arrays.
    pub fn to_json_bytes(&self) -> Vec<u8> {
        let rows: Vec<Vec<serde_json::Value>> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| match cell {
                        Cell::Num(x) => serde_json::Number::from_f64(*x)
                            .map(serde_json::Value::Number)
                            .unwrap_or(serde_json::Value::Null),
                        Cell::Text(s) => serde_json::Value::String(s.clone()),
                        Cell::Empty => serde_json::Value::Null,
                    })
                    .collect()
            })
            .collect();
        let doc = serde_json::json!({
            "schema": self.schema,
            "columns": self.columns,
            "rows": rows,
        });
        let mut bytes = serde_json::to_vec_pretty(&doc).expect("json encode");
        bytes.push(b'\n');
        bytes
    }

    /// Encode per the output spec and write to its destination (stdout when
    /// no path is given).
    pub fn write(&self, spec: &OutputSpec) -> std::io::Result<()> {
        let bytes = match spec.format {
            OutputFormat::Csv => self.to_csv_bytes(),
            OutputFormat::Json => self.to_json_bytes(),
        };
        match &spec.path {
            Some(path) => std::fs::write(Path::new(path), bytes),
            None => std::io::stdout().write_all(&bytes),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new("vacprop.test/1", &["x", "label", "gap"]);
        t.push(vec![Cell::Num(0.5), Cell::text("a,b"), Cell::Empty]);
        t.push(vec![Cell::Num(-1.0), Cell::text("plain"), Cell::Num(0.0)]);
        t
    }

    #[test]
    fn csv_quotes_and_formats_deterministically() {
        let bytes = sample().to_csv_bytes();
        let text = String::from_utf8(bytes.clone()).unwrap();
        assert!(text.starts_with("schema,x,label,gap\n"));
        assert!(text.contains("\"a,b\""), "comma field must be quoted: {text}");
        assert!(text.contains("5.00000000000000000e-1"));
        assert_eq!(bytes, sample().to_csv_bytes());
    }

    #[test]
    fn json_round_trips_with_column_order() {
        let bytes = sample().to_json_bytes();
        let doc: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(doc["schema"], "vacprop.test/1");
        assert_eq!(doc["columns"][0], "x");
        assert_eq!(doc["rows"][0][2], serde_json::Value::Null);
        assert_eq!(doc["rows"][1][0], serde_json::json!(-1.0));
    }
}
