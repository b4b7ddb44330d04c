use clap::ValueEnum;
use serde_json::Value;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("serializable");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut rows = Vec::new();
            flatten("", v, &mut rows);
            rows.into_iter().map(|(k, val)| format!("{k}\t{val}\n")).collect()
        }
    }
}

/// One `key<TAB>value` row per scalar or scalar array; nested keys are dotted.
fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                flatten(&key(k), child, rows);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, child) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), child, rows);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            rows.push((prefix.to_string(), parts.join(",")));
        }
        other => rows.push((prefix.to_string(), scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn tsv_flattens_nested_values() {
        let v = json!({"a": 1, "b": {"c": [1, 2]}, "d": [{"e": "x"}], "f": null});
        assert_eq!(render(&v, Format::Tsv), "a\t1\nb.c\t1,2\nd.0.e\tx\nf\t\n");
    }

    #[test]
    fn json_is_pretty_with_trailing_newline() {
        assert_eq!(render(&json!({"a": [1]}), Format::Json), "{\n  \"a\": [\n    1\n  ]\n}\n");
    }
}
