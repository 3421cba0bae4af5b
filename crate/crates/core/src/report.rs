//! Structured certificates: an append-only list of exact sub-check records
//! with a single overall status, serializable to stable JSON or text.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Refuted,
    Evidence,
    HypothesesNotMet,
    NotChecked,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::Evidence => "evidence",
            Status::HypothesesNotMet => "hypotheses_not_met",
            Status::NotChecked => "not_checked",
        }
    }

    /// Process exit code for a run ending in this status.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Verified => 0,
            Status::Refuted => 1,
            Status::Evidence | Status::HypothesesNotMet | Status::NotChecked => 3,
        }
    }

    /// Status of a composite: any refutation dominates, then anything short
    /// of verification.
    pub fn combine(self, other: Status) -> Status {
        use Status::*;
        match (self, other) {
            (Refuted, _) | (_, Refuted) => Refuted,
            (Verified, s) | (s, Verified) => s,
            (a, b) => a.max(b),
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One sub-check: what was checked, on which inputs, with which exact
/// outputs, and whether it passed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub description: String,
    pub inputs: BTreeMap<String, String>,
    pub outputs: BTreeMap<String, String>,
    pub ok: bool,
}

impl Step {
    pub fn new(description: impl Into<String>) -> Self {
        Step {
            description: description.into(),
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
            ok: true,
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn output(mut self, key: &str, value: impl ToString) -> Self {
        self.outputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }

    pub fn is_witness(&self) -> bool {
        self.description == "witness"
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim_id: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub steps: Vec<Step>,
    pub seed: Option<u64>,
    pub duration_ms: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl VerificationReport {
    pub fn new(claim_id: impl Into<String>) -> Self {
        VerificationReport {
            claim_id: claim_id.into(),
            params: BTreeMap::new(),
            status: Status::Verified,
            steps: Vec::new(),
            seed: None,
            duration_ms: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push(&mut self, step: Step) {
        self.steps.push(step);
    }

    pub fn extend(&mut self, steps: impl IntoIterator<Item = Step>) {
        self.steps.extend(steps);
    }

    pub fn all_ok(&self) -> bool {
        self.steps.iter().all(|s| s.ok)
    }

    pub fn witness(&self) -> Option<&Step> {
        self.steps.iter().find(|s| s.is_witness())
    }

    /// Sets the status, checking the schema rule that a refutation carries a
    /// witness step.
    pub fn finish(mut self, status: Status) -> Self {
        assert!(
            status != Status::Refuted || self.witness().is_some(),
            "refuted report for {} lacks a witness step",
            self.claim_id
        );
        self.status = status;
        self
    }

    /// Verified when every step passed; otherwise refuted, with the first
    /// failing step copied into a witness step.
    pub fn conclude(mut self) -> Self {
        match self.steps.iter().find(|s| !s.ok).cloned() {
            None => self.finish(Status::Verified),
            Some(bad) => {
                if self.witness().is_none() {
                    let mut w = Step::new("witness").input("failed_check", &bad.description);
                    for (k, v) in bad.inputs.iter().chain(&bad.outputs) {
                        w = w.output(k, v);
                    }
                    self.push(w.ok(false));
                }
                self.finish(Status::Refuted)
            }
        }
    }

    /// The deterministic certificate body (no timing).
    pub fn certificate(&self) -> Value {
        let mut body = json!({
            "claim_id": self.claim_id,
            "params": self.params,
            "status": self.status,
            "steps": self.steps,
        });
        if let Some(seed) = self.seed {
            body["seed"] = json!(seed);
        }
        body
    }

    /// Canonical certificate bytes: sorted keys, pretty-printed.
    pub fn certificate_string(&self) -> String {
        serde_json::to_string_pretty(&self.certificate()).expect("serializable")
    }

    pub fn to_json(&self) -> String {
        let v = json!({
            "certificate": self.certificate(),
            "duration_ms": self.duration_ms,
        });
        serde_json::to_string_pretty(&v).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("claim: {}\n", self.claim_id);
        for (k, v) in &self.params {
            out.push_str(&format!("param: {k} = {v}\n"));
        }
        if let Some(seed) = self.seed {
            out.push_str(&format!("seed: {seed}\n"));
        }
        let width = self
            .steps
            .iter()
            .map(|s| s.description.chars().count())
            .max()
            .unwrap_or(0);
        let kv = |m: &BTreeMap<String, String>| {
            m.iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(", ")
        };
        for s in &self.steps {
            let mark = if s.ok { "ok  " } else { "FAIL" };
            let mut line = format!("[{mark}] {:<width$}", s.description);
            if !s.inputs.is_empty() {
                line.push_str(&format!(" | {}", kv(&s.inputs)));
            }
            if !s.outputs.is_empty() {
                line.push_str(&format!(" -> {}", kv(&s.outputs)));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out.push_str(&format!("status: {}\n", self.status));
        out.push_str(&format!("duration_ms: {}\n", self.duration_ms));
        out
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_combination() {
        use Status::*;
        assert_eq!(Verified.combine(Verified), Verified);
        assert_eq!(Verified.combine(Evidence), Evidence);
        assert_eq!(Evidence.combine(Refuted), Refuted);
        assert_eq!(Refuted.exit_code(), 1);
        assert_eq!(HypothesesNotMet.exit_code(), 3);
    }

    #[test]
    fn certificate_excludes_timing_and_sorts_keys() {
        let mut r = VerificationReport::new("demo").param("z", 1).param("a", 2);
        r.push(Step::new("check").output("value", "0"));
        r.duration_ms = 17;
        let a = r.clone().finish(Status::Verified);
        let mut b = a.clone();
        b.duration_ms = 99;
        assert_eq!(a.certificate_string(), b.certificate_string());
        let s = a.certificate_string();
        assert!(!s.contains("duration"));
        assert!(s.find("\"a\"").unwrap() < s.find("\"z\"").unwrap());
        assert!(a.to_json().contains("\"duration_ms\": 17"));
    }

    #[test]
    #[should_panic]
    fn refuted_needs_witness() {
        let _ = VerificationReport::new("demo").finish(Status::Refuted);
    }

    #[test]
    fn text_has_one_line_per_step() {
        let mut r = VerificationReport::new("demo");
        r.push(Step::new("a"));
        r.push(Step::new("longer").ok(false));
        let t = r.finish(Status::Verified).to_text();
        assert!(t.contains("[ok  ] a"));
        assert!(t.contains("[FAIL] longer"));
    }
}
