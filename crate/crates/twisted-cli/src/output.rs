//! Deterministic rendering: sorted keys, floats rounded to 12 significant digits.

use serde_json::Value;

use crate::literal::round12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// Rounds every non-integer number in place.
pub fn normalize(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round12(n.as_f64().expect("f64"));
            serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(normalize).collect()),
        Value::Object(m) => Value::Object(m.into_iter().map(|(k, x)| (k, normalize(x))).collect()),
        other => other,
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                flatten(&join(k), x, rows);
            }
        }
        // short arrays of scalars stay on one line
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) || a.len() > 8 => {
            for (i, x) in a.iter().enumerate() {
                flatten(&join(&i.to_string()), x, rows);
            }
        }
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}

pub fn render(v: &Value, format: Format) -> String {
    let v = normalize(v.clone());
    match format {
        Format::Json => serde_json::to_string_pretty(&v).expect("serializable") + "\n",
        Format::Table => {
            let mut rows = Vec::new();
            flatten("", &v, &mut rows);
            let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            rows.iter().map(|(k, x)| format!("{k:<width$}  {x}\n")).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_is_sorted_and_rounded() {
        let v = json!({"b": 0.1 + 0.2, "a": [1, 2.0]});
        assert_eq!(render(&v, Format::Json), "{\n  \"a\": [\n    1,\n    2.0\n  ],\n  \"b\": 0.3\n}\n");
    }

    #[test]
    fn table_rows() {
        let v = json!({"report": {"rank": 4, "name": "id"}, "ok": true});
        assert_eq!(render(&v, Format::Table), "ok           true\nreport.name  id\nreport.rank  4\n");
    }
}
