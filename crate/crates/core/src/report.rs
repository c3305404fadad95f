//! Structured run reports shared by the pipeline and the command-line tool.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// Suspected defect in published data; evidence is attached, never fatal.
    Warn,
    /// Informational output.
    Info,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Warn => "WARN",
            Status::Info => "INFO",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub status: Status,
    #[serde(default)]
    pub detail: Value,
}

/// `{command, inputs, results, warnings, verified, elapsed_ms}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: Vec<Entry>,
    pub warnings: Vec<String>,
    pub verified: bool,
    pub elapsed_ms: u64,
}

pub struct ReportBuilder {
    start: Instant,
    report: Report,
}

impl ReportBuilder {
    pub fn new(command: &str) -> Self {
        ReportBuilder {
            start: Instant::now(),
            report: Report {
                command: command.into(),
                inputs: BTreeMap::new(),
                results: Vec::new(),
                warnings: Vec::new(),
                verified: true,
                elapsed_ms: 0,
            },
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.report.inputs.insert(key.into(), value.into());
        self
    }

    pub fn push(&mut self, name: &str, status: Status, detail: impl Serialize) -> &mut Self {
        if status == Status::Fail {
            self.report.verified = false;
        }
        self.report.results.push(Entry {
            name: name.into(),
            status,
            detail: serde_json::to_value(detail).expect("serializable detail"),
        });
        self
    }

    pub fn check(&mut self, name: &str, ok: bool, detail: impl Serialize) -> &mut Self {
        self.push(name, Status::from_bool(ok), detail)
    }

    pub fn info(&mut self, name: &str, detail: impl Serialize) -> &mut Self {
        self.push(name, Status::Info, detail)
    }

    pub fn warn(&mut self, name: &str, message: String, detail: impl Serialize) -> &mut Self {
        self.report.warnings.push(message);
        self.push(name, Status::Warn, detail)
    }

    pub fn finish(mut self) -> Report {
        self.report.elapsed_ms = self.start.elapsed().as_millis() as u64;
        self.report
    }
}

impl Report {
    pub fn entry(&self, name: &str) -> Option<&Entry> {
        self.results.iter().find(|e| e.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report")
    }

    /// Human-readable rendering: one status line per result.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "== {} ==", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "  {k} = {}", compact(v));
        }
        for e in &self.results {
            let _ = writeln!(
                out,
                "{:<4} {}: {}",
                e.status.label(),
                e.name,
                shorten(compact(&e.detail))
            );
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        let _ = writeln!(
            out,
            "{} ({} ms)",
            if self.verified { "VERIFIED" } else { "NOT VERIFIED" },
            self.elapsed_ms
        );
        out
    }
}

/// Long details (full certificates) are elided in text mode; `--json` keeps them.
fn shorten(s: String) -> String {
    const MAX: usize = 160;
    match s.char_indices().nth(MAX) {
        Some((i, _)) => format!("{}...", &s[..i]),
        None => s,
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fail_clears_verified_and_json_round_trips() {
        let mut b = ReportBuilder::new("demo");
        b.input("x", "1")
            .check("ok", true, 1)
            .warn("odd", "odd data".into(), "evidence");
        let r = b.finish();
        assert!(r.verified);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);

        let mut b = ReportBuilder::new("demo");
        b.check("bad", false, Value::Null);
        assert!(!b.finish().verified);
    }
}
