use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        })
    }
}

impl FromStr for Status {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "PASS" => Ok(Status::Pass),
            "FAIL" => Ok(Status::Fail),
            "INCONCLUSIVE" => Ok(Status::Inconclusive),
            _ => Err(Error::InvalidParameter(format!("unknown status `{s}`"))),
        }
    }
}

/// A replayable witness: a graph in graph6 form, or a matrix dump.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<f64>>>,
    pub observed: String,
}

impl Counterexample {
    pub fn graph(graph6: impl Into<String>, observed: impl Into<String>) -> Self {
        Counterexample { graph6: Some(graph6.into()), matrix: None, observed: observed.into() }
    }

    pub fn matrices(ms: &[&Matrix], observed: impl Into<String>) -> Self {
        let mut rows = Vec::new();
        for m in ms {
            rows.extend(m.to_rows());
        }
        Counterexample { graph6: None, matrix: Some(rows), observed: observed.into() }
    }

    pub fn claim(observed: impl Into<String>) -> Self {
        Counterexample { graph6: None, matrix: None, observed: observed.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub status: Status,
    pub trials: usize,
    pub parameters: BTreeMap<String, Value>,
    pub counterexamples: Vec<Counterexample>,
    #[serde(default)]
    pub notes: Vec<String>,
    pub runtime_ms: u64,
}

/// Accumulates the outcome of one suite run.
pub(crate) struct ReportBuilder {
    claim_id: String,
    parameters: BTreeMap<String, Value>,
    trials: usize,
    counterexamples: Vec<Counterexample>,
    undecided: usize,
    notes: Vec<String>,
    started: Instant,
    timing: bool,
}

impl ReportBuilder {
    pub(crate) fn new(claim_id: &str, timing: bool) -> Self {
        ReportBuilder {
            claim_id: claim_id.to_string(),
            parameters: BTreeMap::new(),
            trials: 0,
            counterexamples: Vec::new(),
            undecided: 0,
            notes: Vec::new(),
            started: Instant::now(),
            timing,
        }
    }

    pub(crate) fn param(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.parameters.insert(key.to_string(), serde_json::to_value(value).expect("parameters serialize"));
        self
    }

    pub(crate) fn trial(&mut self) {
        self.trials += 1;
    }

    pub(crate) fn fail(&mut self, c: Counterexample) {
        self.counterexamples.push(c);
    }

    /// Records a check that could not be decided.
    pub(crate) fn undecided(&mut self, note: String) {
        self.undecided += 1;
        self.notes.push(note);
    }

    pub(crate) fn note(&mut self, note: String) {
        self.notes.push(note);
    }

    pub(crate) fn finish(self) -> VerificationReport {
        let status = if !self.counterexamples.is_empty() {
            Status::Fail
        } else if self.undecided > 0 {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        VerificationReport {
            claim_id: self.claim_id,
            status,
            trials: self.trials,
            parameters: self.parameters,
            counterexamples: self.counterexamples,
            notes: self.notes,
            runtime_ms: if self.timing { self.started.elapsed().as_millis() as u64 } else { 0 },
        }
    }
}

pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize") + "\n"
}

pub fn reports_from_json(text: &str) -> Result<Vec<VerificationReport>> {
    serde_json::from_str(text).map_err(|e| Error::InvalidParameter(format!("report JSON: {e}")))
}

/// One row per claim: `claim_id,status,trials,runtime_ms`.
pub fn reports_to_csv(reports: &[VerificationReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["claim_id", "status", "trials", "runtime_ms"]).expect("in-memory write");
    for r in reports {
        w.write_record([r.claim_id.clone(), r.status.to_string(), r.trials.to_string(), r.runtime_ms.to_string()])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV is UTF-8")
}
