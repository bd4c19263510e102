//! Verification reports: an ordered list of checks with stable ids.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Check {
    pub fn new(id: impl Into<String>, status: Status, message: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status,
            message: message.into(),
            witness: None,
        }
    }

    pub fn pass(id: impl Into<String>, message: impl Into<String>) -> Self {
        Check::new(id, Status::Pass, message)
    }

    pub fn fail(id: impl Into<String>, message: impl Into<String>) -> Self {
        Check::new(id, Status::Fail, message)
    }

    pub fn info(id: impl Into<String>, message: impl Into<String>) -> Self {
        Check::new(id, Status::Info, message)
    }

    /// Pass or fail depending on `ok`.
    pub fn verdict(id: impl Into<String>, ok: bool, message: impl Into<String>) -> Self {
        Check::new(id, if ok { Status::Pass } else { Status::Fail }, message)
    }

    /// Attaches a witness; empty arrays are dropped.
    pub fn with_witness(mut self, witness: Value) -> Self {
        if witness.as_array().is_none_or(|a| !a.is_empty()) {
            self.witness = Some(witness);
        }
        self
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.message.is_empty() {
            write!(f, "{}: {}", self.id, self.status)
        } else {
            write!(f, "{}: {}  {}", self.id, self.status, self.message)
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub info: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        match check.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Info => self.summary.info += 1,
        }
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        for c in checks {
            self.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} info\n",
            self.summary.pass, self.summary.fail, self.summary.info
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = VerificationReport::new();
        r.push(Check::pass("a.b", ""));
        r.push(Check::fail("a.c", "bad").with_witness(serde_json::json!({"x": 1})));
        r.push(Check::info("a.d", "note"));
        let back = VerificationReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(!r.passed());
        assert_eq!(r.summary, Summary { pass: 1, fail: 1, info: 1 });
        assert_eq!(r.checks[0].to_string(), "a.b: pass");
    }
}
