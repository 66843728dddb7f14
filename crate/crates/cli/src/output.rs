//! Output envelope and its JSON / TSV renderings.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct OutputEnvelope {
    pub command: String,
    pub schema_version: u32,
    pub payload: Value,
    pub warnings: Vec<String>,
}

impl OutputEnvelope {
    pub fn new(command: String, payload: Value, warnings: Vec<String>) -> Self {
        OutputEnvelope {
            command,
            schema_version: SCHEMA_VERSION,
            payload,
            warnings,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    /// Comment header, then one line per row. Arrays of objects become
    /// tables; a single object becomes key/value lines.
    pub fn to_tsv(&self) -> String {
        let mut out = format!("# command\t{}\n# schema_version\t{}\n", self.command, self.schema_version);
        for w in &self.warnings {
            out.push_str(&format!("# warning\t{}\n", one_line(w)));
        }
        match &self.payload {
            Value::Array(rows) => {
                let cols = columns(rows);
                out.push_str(&cols.join("\t"));
                out.push('\n');
                for r in rows {
                    let cells: Vec<String> = cols
                        .iter()
                        .map(|c| r.get(c).map(cell).unwrap_or_default())
                        .collect();
                    out.push_str(&cells.join("\t"));
                    out.push('\n');
                }
            }
            Value::Object(m) => {
                out.push_str("key\tvalue\n");
                for (k, v) in m {
                    out.push_str(&format!("{k}\t{}\n", cell(v)));
                }
            }
            other => {
                out.push_str(&cell(other));
                out.push('\n');
            }
        }
        out
    }
}

fn columns(rows: &[Value]) -> Vec<String> {
    let mut cols: Vec<String> = Vec::new();
    for r in rows {
        if let Value::Object(m) = r {
            for k in m.keys() {
                if !cols.contains(k) {
                    cols.push(k.clone());
                }
            }
        }
    }
    cols
}

fn one_line(s: &str) -> String {
    s.replace(['\t', '\n'], " ")
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => one_line(s),
        Value::Number(_) | Value::Bool(_) => v.to_string(),
        _ => serde_json::to_string(v).expect("serializable"),
    }
}

/// Serializes a payload.
pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn tsv_tables_and_objects() {
        let e = OutputEnvelope::new(
            "codegree x".into(),
            json!([{"a": 1, "b": "u\tv"}, {"a": 2, "c": [1, 2]}]),
            vec!["careful".into()],
        );
        let t = e.to_tsv();
        assert!(t.contains("# warning\tcareful\n"));
        assert!(t.contains("a\tb\tc\n1\tu v\t\n2\t\t[1,2]\n"));
        let e = OutputEnvelope::new("c".into(), json!({"value": 72}), vec![]);
        assert!(e.to_tsv().ends_with("key\tvalue\nvalue\t72\n"));
    }
}
