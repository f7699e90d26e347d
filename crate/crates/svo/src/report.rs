use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One failed comparison. `instance` is enough to rerun it from the CLI:
/// for family campaigns it is the canonical family string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub instance: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub campaign: String,
    pub instances_checked: u64,
    pub mismatches: Vec<Mismatch>,
    /// Campaign-specific observations, e.g. the positives of a classification.
    pub findings: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(campaign: impl Into<String>) -> Self {
        VerificationReport {
            campaign: campaign.into(),
            instances_checked: 0,
            mismatches: Vec::new(),
            findings: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn status(&self) -> Status {
        if self.mismatches.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }

    pub fn record(&mut self, instance: impl Into<String>, expected: impl Into<String>, got: impl Into<String>) {
        self.mismatches.push(Mismatch {
            instance: instance.into(),
            expected: expected.into(),
            got: got.into(),
        });
    }

    /// Structured document; `elapsed_ms` only appears with `timing` so that
    /// the default output is byte-stable.
    pub fn to_json(&self, timing: bool) -> Value {
        let mut doc = json!({
            "schema_version": crate::SCHEMA_VERSION,
            "campaign": self.campaign,
            "instances_checked": self.instances_checked,
            "mismatches": self.mismatches,
            "findings": self.findings,
            "status": self.status(),
        });
        if timing {
            doc["elapsed_ms"] = json!(self.elapsed.as_millis() as u64);
        }
        doc
    }
}
