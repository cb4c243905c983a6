use frobcheck_core::{Error, Usage};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VIOLATION: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const BUDGET: i32 = 3;
    pub const INTERNAL: i32 = 4;
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget { .. } | Error::Cancelled => exit::BUDGET,
        Error::Internal(_) => exit::INTERNAL,
        _ => exit::INPUT,
    }
}

/// One command's output. Everything except `wall_time_ms` is a function of
/// the command line and the model file.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: Value,
    pub model_digest: String,
    pub payload: Value,
    pub payload_digest: String,
    pub usage: Usage,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl Report {
    pub fn new(command: Value, model_digest: String, payload: Value, usage: Usage) -> Self {
        let payload_digest = hex::encode(Sha256::digest(payload.to_string().as_bytes()));
        Report {
            command,
            model_digest,
            payload,
            payload_digest,
            usage,
            wall_time_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// True when any `verdict.status` below `v` is `PAPER_VIOLATION`.
pub fn contains_violation(v: &Value) -> bool {
    match v {
        Value::Object(map) => {
            map.get("status").and_then(Value::as_str) == Some("PAPER_VIOLATION")
                || map.values().any(contains_violation)
        }
        Value::Array(items) => items.iter().any(contains_violation),
        _ => false,
    }
}

/// Tab-separated table with a header row.
pub fn tsv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join("\t");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join("\t"));
        out.push('\n');
    }
    out
}
