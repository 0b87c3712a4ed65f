use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

/// Parameter bounds a sweep was run with.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub tau: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub grid: Option<String>,
}

impl Bounds {
    pub fn dn(d: usize, n: usize) -> Self {
        Bounds {
            d: Some(d),
            n: Some(n),
            ..Default::default()
        }
    }
}

/// Outcome of a verification sweep. `pass` is false exactly when
/// `counterexamples` is nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub bounds: Bounds,
    pub pass: bool,
    pub counterexamples: Vec<String>,
    /// Wall time; excluded from determinism comparisons.
    pub elapsed_ms: u128,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub stats: BTreeMap<String, u64>,
}

impl VerificationReport {
    pub fn builder(claim: &str, bounds: Bounds) -> ReportBuilder {
        ReportBuilder {
            report: VerificationReport {
                claim: claim.to_string(),
                bounds,
                pass: true,
                counterexamples: Vec::new(),
                elapsed_ms: 0,
                notes: Vec::new(),
                stats: BTreeMap::new(),
            },
            start: Instant::now(),
        }
    }

    pub fn stat(&self, key: &str) -> u64 {
        self.stats.get(key).copied().unwrap_or(0)
    }
}

pub struct ReportBuilder {
    report: VerificationReport,
    start: Instant,
}

impl ReportBuilder {
    pub fn fail(&mut self, counterexample: impl Into<String>) {
        self.report.counterexamples.push(counterexample.into());
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.report.notes.push(note.into());
    }

    pub fn bump(&mut self, key: &str, by: u64) {
        *self.report.stats.entry(key.to_string()).or_insert(0) += by;
    }

    pub fn finish(mut self) -> VerificationReport {
        self.report.pass = self.report.counterexamples.is_empty();
        self.report.elapsed_ms = self.start.elapsed().as_millis();
        self.report
    }
}
