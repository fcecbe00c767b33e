//! Output documents in text, CSV and JSON.
//!
//! JSON documents are objects with at least `n`, `kind` and `rows`. Keys come
//! out sorted and every number is an integer; integers above `2^53 - 1` are
//! written as decimal strings.

use std::fmt;

use num_bigint::BigUint;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputDocument {
    pub format: Format,
    pub payload: String,
}

/// Largest integer JSON consumers can hold exactly in a double.
pub const JSON_SAFE_MAX: u64 = (1 << 53) - 1;

pub fn json_uint(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) if v <= JSON_SAFE_MAX => json!(v),
        _ => Value::String(x.to_string()),
    }
}

pub(crate) fn json_document(n: usize, kind: &str, header: Option<Value>, rows: Vec<Value>) -> String {
    let mut doc = Map::new();
    doc.insert("n".into(), json!(n));
    doc.insert("kind".into(), json!(kind));
    doc.insert("rows".into(), Value::Array(rows));
    if let Some(h) = header {
        doc.insert("header".into(), h);
    }
    render_json(&Value::Object(doc))
}

pub fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Parses a JSON document and renders it again.
pub fn reformat_json(payload: &str) -> serde_json::Result<String> {
    let value: Value = serde_json::from_str(payload)?;
    Ok(render_json(&value))
}

pub(crate) fn dashed<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join("-")
}

/// Left-aligned columns separated by ` | `.
pub(crate) struct TextGrid {
    rows: Vec<Option<Vec<String>>>,
}

impl TextGrid {
    pub fn new() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(Some(cells));
    }

    pub fn rule(&mut self) {
        self.rows.push(None);
    }

    pub fn render(&self) -> String {
        let ncols = self.rows.iter().flatten().map(Vec::len).max().unwrap_or(0);
        let mut widths = vec![0; ncols];
        for cells in self.rows.iter().flatten() {
            for (w, c) in widths.iter_mut().zip(cells) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        for row in &self.rows {
            let line = match row {
                Some(cells) => {
                    let padded: Vec<String> = widths
                        .iter()
                        .enumerate()
                        .map(|(i, &w)| {
                            let c = cells.get(i).map(String::as_str).unwrap_or("");
                            format!("{c}{}", " ".repeat(w - c.chars().count()))
                        })
                        .collect();
                    padded.join(" | ")
                }
                None => widths
                    .iter()
                    .map(|&w| "-".repeat(w))
                    .collect::<Vec<_>>()
                    .join("-+-"),
            };
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}
