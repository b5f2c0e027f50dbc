//! Verdicts emitted by the verification suites and the CLI.
//!
//! The JSON layout is described by `schema/verdict_report.schema.json`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::chevalley::{ChevalleyAlgebra, LieElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// No counterexample among seeded samples.
    Probabilistic,
}

impl Status {
    pub fn is_ok(self) -> bool {
        self != Status::Fail
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Probabilistic => "PROB",
        })
    }
}

/// Named elements, each as `(basis label, coefficient)` pairs.
pub type Witness = BTreeMap<String, Vec<(String, String)>>;

pub fn witness_entry(alg: &ChevalleyAlgebra, x: &LieElement) -> Vec<(String, String)> {
    x.coeffs()
        .iter()
        .map(|(&k, c)| (alg.basis_label(k), c.to_string()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub suite: String,
    pub check: String,
    /// Topic the check belongs to.
    pub location: String,
    pub status: Status,
    /// Observed versus expected values; always set on failure.
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Wall-clock time, only recorded when timing is requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl VerdictReport {
    pub fn new(
        suite: &str,
        check: impl Into<String>,
        location: &str,
        passed: bool,
        detail: impl Into<String>,
    ) -> Self {
        let mut detail = detail.into();
        if !passed && detail.is_empty() {
            detail = "check failed".into();
        }
        Self {
            suite: suite.into(),
            check: check.into(),
            location: location.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            detail,
            witness: None,
            runtime_ms: None,
        }
    }

    pub fn with_status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    /// Report for an error raised while running a check.
    pub fn error(suite: &str, check: impl Into<String>, location: &str, e: &crate::Error) -> Self {
        Self::new(suite, check, location, false, format!("error: {e}"))
    }
}

impl fmt::Display for VerdictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}] {}: {}", self.status, self.suite, self.check, self.detail)?;
        if let Some(ms) = self.runtime_ms {
            write!(f, " ({ms} ms)")?;
        }
        Ok(())
    }
}

pub fn all_ok(reports: &[VerdictReport]) -> bool {
    reports.iter().all(|r| r.status.is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_always_has_detail() {
        let r = VerdictReport::new("s", "c", "l", false, "");
        assert_eq!(r.status, Status::Fail);
        assert!(!r.detail.is_empty());
    }

    #[test]
    fn json_is_stable() {
        let r = VerdictReport::new("s", "c", "l", true, "ok");
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(
            s,
            r#"{"suite":"s","check":"c","location":"l","status":"pass","detail":"ok"}"#
        );
        let back: VerdictReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
