//! Deterministic run reports: ordered key/value pairs emitted as plain text
//! or one JSON document (keys sorted, so byte-identical across runs).

use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Default)]
pub struct Report {
    entries: Vec<(String, Value)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.push("command", command);
        r
    }

    pub fn push(&mut self, key: &str, value: impl Into<Value>) {
        self.entries.push((key.to_string(), value.into()));
    }

    pub fn push_list(&mut self, key: &str, values: Vec<String>) {
        self.entries.push((
            key.to_string(),
            Value::Array(values.into_iter().map(Value::String).collect()),
        ));
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => {
                let mut out = String::new();
                for (k, v) in &self.entries {
                    match v {
                        Value::Array(items) => {
                            out.push_str(&format!("{k}:\n"));
                            for item in items {
                                out.push_str(&format!("  - {}\n", scalar(item)));
                            }
                        }
                        other => out.push_str(&format!("{k}: {}\n", scalar(other))),
                    }
                }
                out
            }
            OutputFormat::Json => {
                // serde_json's default map is ordered by key: stable output
                let mut map = Map::new();
                for (k, v) in &self.entries {
                    map.insert(k.clone(), v.clone());
                }
                let mut s = serde_json::to_string_pretty(&Value::Object(map)).unwrap();
                s.push('\n');
                s
            }
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
