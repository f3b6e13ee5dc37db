//! Report assembly and rendering.
//!
//! Every command produces one [`Report`]; `--json` serializes it, otherwise
//! the same payload renders as an aligned key/value table. Integers below
//! 2^53 become JSON numbers, anything larger a decimal string, so any JSON
//! consumer reads the values losslessly.

use serde_json::{Map, Value};

const JSON_SAFE: u64 = 1 << 53;

pub fn juint(n: u64) -> Value {
    if n < JSON_SAFE {
        Value::from(n)
    } else {
        Value::String(n.to_string())
    }
}

pub fn jint(n: i64) -> Value {
    if n.unsigned_abs() < JSON_SAFE {
        Value::from(n)
    } else {
        Value::String(n.to_string())
    }
}

pub fn juint_list<I: IntoIterator<Item = u64>>(ns: I) -> Value {
    Value::Array(ns.into_iter().map(juint).collect())
}

pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub violations: Vec<Value>,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            inputs: Value::Object(Map::new()),
            results: Value::Object(Map::new()),
            violations: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_value(&self) -> Value {
        let mut map = Map::new();
        map.insert("command".into(), Value::String(self.command.into()));
        map.insert("inputs".into(), self.inputs.clone());
        map.insert("results".into(), self.results.clone());
        map.insert("violations".into(), Value::Array(self.violations.clone()));
        map.insert("elapsed_ms".into(), juint(self.elapsed_ms.min(u64::MAX as u128) as u64));
        Value::Object(map)
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("report serializes")
    }

    /// Aligned table carrying the same numeric payload as the JSON form.
    pub fn render_table(&self) -> String {
        let mut rows: Vec<(String, String)> = Vec::new();
        flatten("", &self.inputs, &mut rows);
        let input_rows = rows.len();
        flatten("", &self.results, &mut rows);

        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for (i, (key, value)) in rows.iter().enumerate() {
            if i == 0 && input_rows > 0 {
                out.push_str("inputs:\n");
            }
            if i == input_rows {
                out.push_str("results:\n");
            }
            out.push_str(&format!("  {key:width$}  {value}\n"));
        }
        if self.violations.is_empty() {
            out.push_str("violations: none\n");
        } else {
            out.push_str(&format!("violations: {}\n", self.violations.len()));
            for v in &self.violations {
                out.push_str(&format!("  {}\n", scalar(v)));
            }
        }
        out.push_str(&format!("elapsed_ms: {}\n", self.elapsed_ms));
        out
    }
}

fn flatten(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (key, inner) in map {
                let path = if prefix.is_empty() {
                    key.clone()
                } else {
                    format!("{prefix}.{key}")
                };
                flatten(&path, inner, rows);
            }
        }
        Value::Array(items) if items.iter().all(is_scalar) => {
            let joined: Vec<String> = items.iter().map(scalar).collect();
            rows.push((prefix.to_string(), format!("[{}]", joined.join(", "))));
        }
        Value::Array(items) => {
            for (i, inner) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), inner, rows);
            }
        }
        other => rows.push((prefix.to_string(), scalar(other))),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(map) => {
            let parts: Vec<String> = map.iter().map(|(k, v)| format!("{k}={}", scalar(v))).collect();
            parts.join(" ")
        }
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_integers_become_strings() {
        assert_eq!(juint(7), Value::from(7));
        assert_eq!(juint(1 << 53), Value::String("9007199254740992".into()));
        assert_eq!(jint(-(1i64 << 53)), Value::String("-9007199254740992".into()));
        assert_eq!(jint((1i64 << 53) - 1), Value::from((1i64 << 53) - 1));
    }

    #[test]
    fn report_round_trips_through_json() {
        let mut report = Report::new("demo");
        report.results = serde_json::json!({"genus": 4, "gaps": [1, 2, 4, 7]});
        let text = report.render_json();
        let parsed: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, report.to_value());
    }

    #[test]
    fn table_contains_the_numeric_payload() {
        let mut report = Report::new("demo");
        report.results = serde_json::json!({"genus": 4, "gaps": [1, 2, 4, 7]});
        let table = report.render_table();
        assert!(table.contains("genus"));
        assert!(table.contains("[1, 2, 4, 7]"));
        assert!(table.contains("violations: none"));
    }
}
