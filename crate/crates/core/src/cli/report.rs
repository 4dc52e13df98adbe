use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of(path: &Path, bytes: &[u8]) -> Self {
        InputDigest {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(bytes)),
        }
    }
}

/// Result of one command. `outcome` carries no timing so it can be compared
/// across runs; wall-clock time is reported separately.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub outcome: Value,
    pub exit_code: i32,
    pub wall_ms: u64,
}

impl RunReport {
    fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "outcome": self.outcome,
            "exit_code": self.exit_code,
            "timing": { "wall_ms": self.wall_ms },
        })
    }

    /// JSON (keys sorted) or flattened `path = value` lines, sorted, with the
    /// timing line last.
    pub fn render(&self, format: Format) -> String {
        let value = self.to_value();
        match format {
            Format::Json => serde_json::to_string_pretty(&value).expect("json"),
            Format::Text => {
                let mut lines = Vec::new();
                flatten("", &value, &mut lines);
                let (mut timing, mut rest): (Vec<String>, Vec<String>) =
                    lines.into_iter().partition(|l| l.starts_with("timing."));
                rest.sort();
                rest.append(&mut timing);
                rest.join("\n")
            }
        }
    }
}

fn flatten(prefix: &str, value: &Value, out: &mut Vec<String>) {
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, v, out);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i:04}]"), v, out);
            }
        }
        leaf => out.push(format!("{prefix} = {leaf}")),
    }
}
