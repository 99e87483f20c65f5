//! Machine-readable verification reports: named assertions with expected and
//! computed values, an overall pass/fail status, and a deterministic digest
//! of the computed data.

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use std::time::Instant;

#[derive(Serialize, Debug, Clone)]
pub struct Assertion {
    pub name: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

#[derive(Serialize, Debug, Clone)]
pub struct Report {
    pub schema: u32,
    pub version: String,
    pub command: String,
    pub params: Value,
    pub assertions: Vec<Assertion>,
    pub status: String,
    pub digest: String,
    pub timing_ms: u128,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Accumulates assertions and digest material for one command run. The
/// digest covers the command, its parameters, every assertion, and any
/// canonical basis text absorbed along the way — everything except timing,
/// so repeated runs with identical parameters produce identical digests.
pub struct ReportBuilder {
    command: String,
    params: serde_json::Map<String, Value>,
    assertions: Vec<Assertion>,
    hasher: Sha256,
    start: Instant,
}

impl ReportBuilder {
    pub fn new(command: &str) -> ReportBuilder {
        let mut hasher = Sha256::new();
        hasher.update(command.as_bytes());
        ReportBuilder {
            command: command.to_string(),
            params: serde_json::Map::new(),
            assertions: Vec::new(),
            hasher,
            start: Instant::now(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        let value = value.into();
        self.hasher.update(key.as_bytes());
        self.hasher.update(value.to_string().as_bytes());
        self.params.insert(key.to_string(), value);
    }

    pub fn push(&mut self, name: &str, expected: Value, computed: Value) -> bool {
        let pass = expected == computed;
        self.hasher.update(name.as_bytes());
        self.hasher.update(expected.to_string().as_bytes());
        self.hasher.update(computed.to_string().as_bytes());
        self.assertions.push(Assertion {
            name: name.to_string(),
            expected,
            computed,
            pass,
        });
        pass
    }

    pub fn check_usize(&mut self, name: &str, expected: usize, computed: usize) -> bool {
        self.push(name, json!(expected), json!(computed))
    }

    pub fn check_bool(&mut self, name: &str, computed: bool) -> bool {
        self.push(name, json!(true), json!(computed))
    }

    pub fn check_str(&mut self, name: &str, expected: &str, computed: &str) -> bool {
        self.push(name, json!(expected), json!(computed))
    }

    /// Feed canonical text of a computed object (basis rows, dimensions)
    /// into the digest.
    pub fn absorb(&mut self, text: &str) {
        self.hasher.update(text.as_bytes());
    }

    pub fn finish(self) -> Report {
        let status = if self.assertions.iter().all(|a| a.pass) {
            "pass"
        } else {
            "fail"
        };
        Report {
            schema: 1,
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: self.command,
            params: Value::Object(self.params),
            assertions: self.assertions,
            status: status.to_string(),
            digest: hex::encode(self.hasher.finalize()),
            timing_ms: self.start.elapsed().as_millis(),
        }
    }
}
