use std::fmt::Write as _;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::ExitClass;

/// A report field. Text output and JSON share the same fields in the same order.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Text(String),
    List(Vec<String>),
    Bool(bool),
    Int(i64),
    /// Multi-line text rendering paired with a structured JSON form.
    Rich {
        text: String,
        json: serde_json::Value,
    },
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Text(t) => s.serialize_str(t),
            Value::List(l) => l.serialize(s),
            Value::Bool(b) => s.serialize_bool(*b),
            Value::Int(i) => s.serialize_i64(*i),
            Value::Rich { json, .. } => json.serialize(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Fields(pub Vec<(String, Value)>);

impl Fields {
    pub fn text(&mut self, key: &str, v: impl ToString) -> &mut Self {
        self.0.push((key.into(), Value::Text(v.to_string())));
        self
    }

    pub fn list<T: ToString>(&mut self, key: &str, items: &[T]) -> &mut Self {
        self.0.push((
            key.into(),
            Value::List(items.iter().map(|x| x.to_string()).collect()),
        ));
        self
    }

    pub fn bool(&mut self, key: &str, b: bool) -> &mut Self {
        self.0.push((key.into(), Value::Bool(b)));
        self
    }

    pub fn int(&mut self, key: &str, i: i64) -> &mut Self {
        self.0.push((key.into(), Value::Int(i)));
        self
    }

    pub fn rich(&mut self, key: &str, text: String, json: serde_json::Value) -> &mut Self {
        self.0.push((key.into(), Value::Rich { text, json }));
        self
    }
}

impl Serialize for Fields {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorInfo {
    pub class: ExitClass,
    pub exit_code: i32,
    pub message: String,
}

/// Outcome of one statement.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub line: usize,
    /// `None` when the command certifies nothing.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certified: Option<bool>,
    pub result: Fields,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Caps {
    pub groebner_steps: Option<usize>,
    pub chain: usize,
}

/// Everything a run produced.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunOutput {
    pub schema: u32,
    pub script: String,
    pub seed: u64,
    pub caps: Caps,
    pub reports: Vec<Report>,
    pub exit_class: ExitClass,
    pub exit_code: i32,
}

impl RunOutput {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            let _ = writeln!(out, "> {}", r.command);
            for (k, v) in &r.result.0 {
                render_value(&mut out, k, v);
            }
            if let Some(c) = r.certified {
                let _ = writeln!(out, "  certified: {}", if c { "yes" } else { "no" });
            }
            if let Some(e) = &r.error {
                let _ = writeln!(out, "  error[{}]: {}", class_name(e.class), e.message);
            }
            if let Some(ms) = r.elapsed_ms {
                let _ = writeln!(out, "  time: {ms} ms");
            }
        }
        let _ = writeln!(
            out,
            "exit: {} ({})",
            self.exit_code,
            class_name(self.exit_class)
        );
        out
    }
}

pub fn class_name(c: ExitClass) -> &'static str {
    match c {
        ExitClass::Success => "success",
        ExitClass::Parse => "parse",
        ExitClass::Precondition => "precondition",
        ExitClass::ResourceCap => "resource_cap",
        ExitClass::Invariant => "invariant",
    }
}

fn render_value(out: &mut String, key: &str, v: &Value) {
    match v {
        Value::Text(t) => {
            let _ = writeln!(out, "  {key}: {t}");
        }
        Value::Bool(b) => {
            let _ = writeln!(out, "  {key}: {b}");
        }
        Value::Int(i) => {
            let _ = writeln!(out, "  {key}: {i}");
        }
        Value::List(items) if items.is_empty() => {
            let _ = writeln!(out, "  {key}: (none)");
        }
        Value::List(items) => {
            let _ = writeln!(out, "  {key}:");
            for i in items {
                let _ = writeln!(out, "    {i}");
            }
        }
        Value::Rich { text, .. } => {
            let _ = writeln!(out, "  {key}:");
            for line in text.lines() {
                let _ = writeln!(out, "    {line}");
            }
        }
    }
}
