//! Deterministic analysis reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::certificate::Certificate;
use crate::hopf::HopfAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Serialize)]
pub struct InputInfo {
    pub source: String,
    pub name: String,
    pub field: String,
    pub dim: usize,
    /// SHA-256 of the canonical JSON encoding of the structure constants.
    pub digest: String,
}

/// One analysis run. Contains no timings, so equal inputs give byte-identical JSON.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input: InputInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub passed: bool,
    pub certificates: BTreeMap<String, Certificate>,
    pub results: Map<String, Value>,
}

impl Report {
    pub fn new(command: impl Into<String>, input: InputInfo, seed: Option<u64>) -> Self {
        Report {
            tool: "hopfkit",
            version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            input,
            seed,
            passed: true,
            certificates: BTreeMap::new(),
            results: Map::new(),
        }
    }

    pub fn certificate(&mut self, name: &str, cert: Certificate) {
        self.passed &= cert.all_passed();
        self.certificates.insert(name.to_string(), cert);
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} on {} ({}, dim {})", self.command, self.input.name, self.input.field, self.input.dim);
        let _ = writeln!(out, "input sha256 {}", self.input.digest);
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed {seed}");
        }
        for (k, v) in &self.results {
            let _ = writeln!(out, "{k}: {}", text_value(v));
        }
        for (name, cert) in &self.certificates {
            let _ = writeln!(out, "[{name}]");
            for c in &cert.checks {
                let status = if c.passed { "pass" } else { "FAIL" };
                let _ = write!(out, "  {status} {}", c.name);
                if let Some(w) = &c.witness {
                    let _ = write!(out, " at {w:?}");
                }
                if let Some(d) = &c.detail {
                    let _ = write!(out, ": {d}");
                }
                out.push('\n');
            }
        }
        let _ = writeln!(out, "{}", if self.passed { "all checks passed" } else { "some checks FAILED" });
        out
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) if m.contains_key("dim") && m.contains_key("elements") => {
            let elems: Vec<String> = m["elements"]
                .as_array()
                .map(|a| a.iter().filter_map(|e| e.as_str().map(String::from)).collect())
                .unwrap_or_default();
            format!("dim {} span {{{}}}", m["dim"], elems.join(", "))
        }
        other => other.to_string(),
    }
}

pub fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn subspace(h: &HopfAlgebra, s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.basis().iter().map(|v| scalars(v)).collect::<Vec<_>>(),
        "elements": s.basis().iter().map(|v| h.format_element(v)).collect::<Vec<_>>(),
    })
}

pub fn matrix(m: &Matrix) -> Value {
    Value::Array(m.row_vectors().iter().map(|r| scalars(r)).collect())
}
