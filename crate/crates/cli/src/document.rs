//! The single output document every invocation produces, and its two serializers.

use macaulay_core::{Error, ParseError};
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "macaulay-cli/1";

/// How an input argument was read.
#[derive(Clone, Debug)]
pub struct InputEcho {
    pub role: String,
    pub text: String,
    pub nvars: usize,
    pub inferred: bool,
}

impl InputEcho {
    fn to_json(&self) -> Value {
        json!({
            "role": self.role,
            "text": self.text,
            "nvars": self.nvars,
            "nvars_source": if self.inferred { "inferred" } else { "option" },
        })
    }
}

#[derive(Debug)]
pub enum Failure {
    /// Malformed input (bad polynomial, unreadable file, inconsistent options). Exit status 2.
    Input {
        message: String,
        text: Option<String>,
        position: Option<usize>,
    },
    /// The input is well formed but outside an operation's scope. Exit status 1.
    Domain(String),
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure::Input {
            message: message.into(),
            text: None,
            position: None,
        }
    }

    pub fn parse(text: &str, e: ParseError) -> Self {
        Failure::Input {
            message: e.message,
            text: Some(text.to_string()),
            position: Some(e.position),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Input { .. } => 2,
            Failure::Domain(_) => 1,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Failure::Input {
                message,
                text,
                position,
            } => {
                let mut m = Map::new();
                m.insert("kind".into(), "input".into());
                m.insert("message".into(), message.clone().into());
                if let Some(t) = text {
                    m.insert("text".into(), t.clone().into());
                }
                if let Some(p) = position {
                    m.insert("position".into(), (*p).into());
                }
                Value::Object(m)
            }
            Failure::Domain(message) => json!({"kind": "domain", "message": message}),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => Failure::Input {
                message: p.message,
                text: None,
                position: Some(p.position),
            },
            other => Failure::Domain(other.to_string()),
        }
    }
}

pub struct Document {
    pub command: &'static str,
    pub inputs: Vec<InputEcho>,
    pub outcome: Result<Map<String, Value>, Failure>,
}

impl Document {
    pub fn exit_code(&self) -> u8 {
        match &self.outcome {
            Ok(result) if result.get("passed") == Some(&Value::Bool(false)) => 1,
            Ok(_) => 0,
            Err(f) => f.exit_code(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("schema".into(), SCHEMA.into());
        doc.insert("command".into(), self.command.into());
        doc.insert(
            "inputs".into(),
            Value::Array(self.inputs.iter().map(InputEcho::to_json).collect()),
        );
        match &self.outcome {
            Ok(result) => doc.insert("result".into(), Value::Object(result.clone())),
            Err(f) => doc.insert("error".into(), f.to_json()),
        };
        Value::Object(doc)
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("plain JSON values");
        s.push('\n');
        s
    }

    /// Human summary. Errors go to the second string, meant for stderr.
    pub fn to_text(&self) -> (String, String) {
        let mut out = String::new();
        for i in &self.inputs {
            let source = if i.inferred { "inferred" } else { "from --nvars" };
            out.push_str(&format!("{}: {}  [{} variables, {}]\n", i.role, i.text, i.nvars, source));
        }
        match &self.outcome {
            Ok(result) => {
                render_map(result, 0, &mut out);
                (out, String::new())
            }
            Err(Failure::Input {
                message,
                text,
                position,
            }) => {
                let mut err = String::new();
                match (text, position) {
                    (Some(t), Some(p)) => {
                        err.push_str(&format!("error: {message} at position {p}\n"));
                        err.push_str(&format!("  {t}\n  {}^\n", " ".repeat(*p)));
                    }
                    (None, Some(p)) => err.push_str(&format!("error: {message} at position {p}\n")),
                    _ => err.push_str(&format!("error: {message}\n")),
                }
                (out, err)
            }
            Err(Failure::Domain(message)) => (out, format!("error: {message}\n")),
        }
    }
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.into()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn inline_array(items: &[Value]) -> Option<String> {
    let texts: Option<Vec<String>> = items.iter().map(scalar_text).collect();
    let texts = texts?;
    let sep = if items.iter().all(Value::is_number) { " " } else { ", " };
    Some(if texts.is_empty() { "(none)".into() } else { texts.join(sep) })
}

fn render_map(map: &Map<String, Value>, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    for (key, value) in map {
        let label = key.replace('_', " ");
        if let Some(s) = scalar_text(value) {
            out.push_str(&format!("{pad}{label}: {s}\n"));
            continue;
        }
        match value {
            Value::Array(items) => {
                if let Some(line) = inline_array(items) {
                    out.push_str(&format!("{pad}{label}: {line}\n"));
                } else {
                    out.push_str(&format!("{pad}{label}:\n"));
                    for item in items {
                        render_item(item, indent + 1, out);
                    }
                }
            }
            Value::Object(inner) => {
                out.push_str(&format!("{pad}{label}:\n"));
                render_map(inner, indent + 1, out);
            }
            _ => unreachable!("scalars handled above"),
        }
    }
}

fn render_item(item: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match item {
        Value::Object(inner) => {
            let mut block = String::new();
            render_map(inner, indent + 1, &mut block);
            let trimmed = block.trim_start();
            out.push_str(&format!("{pad}- {trimmed}"));
        }
        Value::Array(row) => {
            let line = inline_array(row).unwrap_or_else(|| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
            out.push_str(&format!("{pad}- {line}\n"));
        }
        other => out.push_str(&format!("{pad}- {}\n", scalar_text(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(result: Value) -> Document {
        Document {
            command: "hf",
            inputs: vec![InputEcho {
                role: "F".into(),
                text: "y1^2".into(),
                nvars: 1,
                inferred: true,
            }],
            outcome: Ok(result.as_object().unwrap().clone()),
        }
    }

    #[test]
    fn text_lists_numbers_with_spaces() {
        let d = doc(json!({"hilbert_function": [1, 2, 1], "generators": ["x1^3", "x2^2"]}));
        let (out, err) = d.to_text();
        assert!(err.is_empty());
        assert!(out.contains("F: y1^2  [1 variables, inferred]"));
        assert!(out.contains("hilbert function: 1 2 1"));
        assert!(out.contains("generators: x1^3, x2^2"));
    }

    #[test]
    fn nested_items_are_indented() {
        let d = doc(json!({"rows": [{"class": "A", "hf": [1, 1]}, {"class": "B", "hf": [1]}]}));
        let (out, _) = d.to_text();
        assert!(out.contains("rows:\n  - class: A\n    hf: 1 1\n  - class: B\n"), "{out}");
    }

    #[test]
    fn json_has_schema_and_error_kind() {
        let d = Document {
            command: "hf",
            inputs: vec![],
            outcome: Err(Failure::parse("y1 +", ParseError { position: 4, message: "x".into() })),
        };
        let v = d.to_json();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["error"]["kind"], "input");
        assert_eq!(v["error"]["position"], 4);
        assert_eq!(d.exit_code(), 2);
        let (_, err) = d.to_text();
        assert!(err.contains("      ^"), "{err}");
    }

    #[test]
    fn failed_check_sets_exit_status() {
        assert_eq!(doc(json!({"passed": false})).exit_code(), 1);
        assert_eq!(doc(json!({"passed": true})).exit_code(), 0);
    }
}
