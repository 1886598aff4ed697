use serde::Serialize;
use serde_json::{json, Value};

/// Outcome class of one command, ordered by severity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Negative,
    Inconsistent,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Negative => 1,
            Status::Inconsistent => 2,
            Status::Error => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub result: Value,
}

impl Report {
    pub fn error(command: impl Into<String>, err: &crate::Error) -> Report {
        Report {
            command: command.into(),
            status: Status::Error,
            result: json!({ "error": err.to_string() }),
        }
    }
}

/// Exit code of a batch: the most severe status, 0 for no reports.
pub fn exit_code(reports: &[Report]) -> i32 {
    reports.iter().map(|r| r.status.exit_code()).max().unwrap_or(0)
}

pub(crate) fn document(reports: &[Report]) -> Value {
    json!({
        "version": env!("CARGO_PKG_VERSION"),
        "reports": reports,
        "exit_code": exit_code(reports),
    })
}

/// Pretty JSON with a trailing newline.
pub fn render_json(reports: &[Report]) -> String {
    let mut s = serde_json::to_string_pretty(&document(reports)).expect("serializable");
    s.push('\n');
    s
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn walk(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, child) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                walk(&key, child, out);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
            for (i, child) in items.iter().enumerate() {
                walk(&format!("{prefix}[{i}]"), child, out);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{prefix}: [{}]\n", parts.join(", ")));
        }
        other => out.push_str(&format!("{prefix}: {}\n", scalar(other))),
    }
}

/// Line-oriented `key: value` rendering, one block per report.
pub fn render_text(reports: &[Report]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = serde_json::to_value(r.status).expect("serializable");
        out.push_str(&format!("== {} [{}]\n", r.command, scalar(&status)));
        walk("", &r.result, &mut out);
    }
    out.push_str(&format!("exit_code: {}\n", exit_code(reports)));
    out
}
