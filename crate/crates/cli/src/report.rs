//! Deterministic command output in two shapes: human text lines and
//! machine records of sorted `key=value` pairs.

use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Records,
}

#[derive(Debug)]
pub struct Report {
    command: &'static str,
    text: Vec<String>,
    records: Vec<BTreeMap<String, String>>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            text: Vec::new(),
            records: Vec::new(),
        }
    }

    pub fn line(&mut self, line: impl Into<String>) {
        self.text.push(line.into());
    }

    /// One machine record; values must stay single tokens (no spaces).
    pub fn record(&mut self, pairs: &[(&str, String)]) {
        self.records.push(
            pairs
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
        );
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Text => {
                for line in &self.text {
                    out.push_str(line);
                    out.push('\n');
                }
            }
            Format::Records => {
                for record in &self.records {
                    out.push_str(self.command);
                    for (key, value) in record {
                        out.push(' ');
                        out.push_str(key);
                        out.push('=');
                        out.push_str(value);
                    }
                    out.push('\n');
                }
            }
        }
        out
    }
}
