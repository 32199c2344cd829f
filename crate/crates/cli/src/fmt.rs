//! Output rendering. Every format is deterministic: JSON objects serialize
//! with sorted keys, plain and CSV output follow the field order given at
//! the call site, and nothing depends on locale or time.

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// One value rendered under the requested format.
pub fn scalar(format: Format, key: &str, value: &str) -> String {
    match format {
        Format::Plain => format!("{value}\n"),
        Format::Json => {
            let mut map = Map::new();
            map.insert(key.to_owned(), Value::String(value.to_owned()));
            format!("{}\n", Value::Object(map))
        }
        Format::Csv => format!("{key}\n{}\n", csv_cell(value)),
    }
}

/// A fixed set of named fields. JSON sorts its keys; plain and CSV keep the
/// given order.
pub fn object(format: Format, fields: &[(&str, Value)]) -> String {
    match format {
        Format::Plain => {
            let mut out = String::new();
            for (key, value) in fields {
                out.push_str(&format!("{key}: {}\n", plain_value(value)));
            }
            out
        }
        Format::Json => {
            let mut map = Map::new();
            for (key, value) in fields {
                map.insert((*key).to_owned(), value.clone());
            }
            format!("{}\n", Value::Object(map))
        }
        Format::Csv => {
            let header: Vec<String> = fields.iter().map(|(k, _)| (*k).to_owned()).collect();
            let row: Vec<String> = fields
                .iter()
                .map(|(_, v)| csv_cell(&csv_value(v)))
                .collect();
            format!("{}\n{}\n", header.join(","), row.join(","))
        }
    }
}

/// A homogeneous table. JSON renders an array of objects keyed by the
/// headers; plain aligns columns; CSV quotes only where needed.
pub fn rows(format: Format, headers: &[&str], rows: &[Vec<String>]) -> String {
    match format {
        Format::Plain => {
            let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
            for row in rows {
                for (i, cell) in row.iter().enumerate() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
            let mut out = String::new();
            let render = |cells: Vec<&str>, out: &mut String| {
                let line: Vec<String> = cells
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{c:<width$}", width = widths[i]))
                    .collect();
                out.push_str(line.join("  ").trim_end());
                out.push('\n');
            };
            render(headers.to_vec(), &mut out);
            for row in rows {
                render(row.iter().map(String::as_str).collect(), &mut out);
            }
            out
        }
        Format::Json => {
            let array: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let mut map = Map::new();
                    for (key, cell) in headers.iter().zip(row) {
                        map.insert((*key).to_owned(), Value::String(cell.clone()));
                    }
                    Value::Object(map)
                })
                .collect();
            format!("{}\n", Value::Array(array))
        }
        Format::Csv => {
            let mut out = String::new();
            out.push_str(&headers.join(","));
            out.push('\n');
            for row in rows {
                let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
    }
}

fn plain_value(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(plain_value).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

fn csv_value(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(csv_value).collect::<Vec<_>>().join("; "),
        other => other.to_string(),
    }
}

fn csv_cell(cell: &str) -> String {
    if cell.contains(',') || cell.contains('"') || cell.contains('\n') {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_owned()
    }
}
