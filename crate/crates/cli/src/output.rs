//! Rendering of result documents as JSON, CSV or aligned text.

use serde_json::{Map, Value};

use crate::options::Format;

/// A result: a JSON body plus a flat table used by the CSV and text formats.
pub struct Document {
    pub body: Map<String, Value>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// False when a verification compared unequal.
    pub verified: bool,
}

impl Document {
    pub fn new(header: &[&str]) -> Self {
        Self { body: Map::new(), header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new(), verified: true }
    }

    /// A document holding one scalar under `"value"`.
    pub fn scalar(value: String) -> Self {
        let mut doc = Self::new(&["value"]);
        doc.body.insert("value".into(), Value::String(value.clone()));
        doc.rows.push(vec![value]);
        doc
    }

    pub fn insert(&mut self, key: &str, value: Value) {
        self.body.insert(key.into(), value);
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }
}

/// Serializes the document with the header fields first.
pub fn render(command: &str, inputs: Map<String, Value>, doc: &Document, format: Format) -> Result<String, String> {
    match format {
        Format::Json => {
            let mut root = Map::new();
            root.insert("command".into(), Value::String(command.into()));
            root.insert("inputs".into(), Value::Object(inputs));
            for (k, v) in &doc.body {
                root.insert(k.clone(), v.clone());
            }
            let mut text = serde_json::to_string_pretty(&Value::Object(root)).map_err(|e| e.to_string())?;
            text.push('\n');
            Ok(text)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&doc.header).map_err(|e| e.to_string())?;
            for r in &doc.rows {
                w.write_record(r).map_err(|e| e.to_string())?;
            }
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            String::from_utf8(bytes).map_err(|e| e.to_string())
        }
        Format::Text => {
            let mut out = format!("# {command}");
            for (k, v) in &inputs {
                let v = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                out.push_str(&format!(" --{k} {v}"));
            }
            out.push('\n');
            let mut widths: Vec<usize> = doc.header.iter().map(String::len).collect();
            for r in &doc.rows {
                for (i, c) in r.iter().enumerate() {
                    if i < widths.len() {
                        widths[i] = widths[i].max(c.len());
                    }
                }
            }
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                padded.join("  ").trim_end().to_string() + "\n"
            };
            out.push_str(&line(&doc.header));
            for r in &doc.rows {
                out.push_str(&line(r));
            }
            Ok(out)
        }
    }
}
