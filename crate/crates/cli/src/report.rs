use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use coalesce_core::verify::{any_failed, VerificationRow};
use coalesce_core::Graph;

/// Identifies one input graph without embedding it.
#[derive(Debug, Clone, Serialize)]
pub struct Fingerprint {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub sha256: String,
}

impl Fingerprint {
    pub fn of(name: &str, g: &Graph) -> Self {
        Fingerprint {
            name: name.to_string(),
            n: g.order(),
            m: g.size(),
            sha256: hex::encode(Sha256::digest(g.to_edge_list().as_bytes())),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<Fingerprint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub payload: Option<Value>,
    pub rows: Vec<VerificationRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorBody>,
    pub status: &'static str,
    pub exit_code: i32,
}

impl RunReport {
    pub fn success(command: Vec<String>, inputs: Vec<Fingerprint>, payload: Value, rows: Vec<VerificationRow>) -> Self {
        let failed = any_failed(&rows);
        RunReport {
            command,
            inputs,
            payload: Some(payload),
            rows,
            error: None,
            status: if failed { "fail" } else { "ok" },
            exit_code: if failed { 3 } else { 0 },
        }
    }

    pub fn failure(command: Vec<String>, inputs: Vec<Fingerprint>, kind: &str, message: String) -> Self {
        RunReport {
            command,
            inputs,
            payload: None,
            rows: Vec::new(),
            error: Some(ErrorBody {
                kind: kind.to_string(),
                message,
            }),
            status: "error",
            exit_code: 1,
        }
    }

    pub fn summary(&self) -> String {
        let count = |s: &str| self.rows.iter().filter(|r| r.status.to_string() == s).count();
        match &self.error {
            Some(e) => format!("error ({}): {}", e.kind, e.message),
            None if self.rows.is_empty() => "ok".to_string(),
            None => format!(
                "{} rows: {} pass, {} fail, {} skipped",
                self.rows.len(),
                count("PASS"),
                count("FAIL"),
                count("SKIPPED")
            ),
        }
    }
}
