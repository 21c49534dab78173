//! Reports emitted by the property suites.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

/// Violations kept verbatim in a report; the rest are only counted.
pub const MAX_RECORDED_VIOLATIONS: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub clause: String,
    pub expected: String,
    pub inputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// One sub-verdict of a cross-validating suite, such as "the axiom suite
/// failed" inside a biconditional check that itself passes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub suite: String,
    pub pass: bool,
    pub samples: usize,
    pub seed: u64,
    pub elapsed_ms: u64,
    pub violation_count: usize,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl PropertyReport {
    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    /// Clauses that have at least one recorded violation.
    pub fn violated_clauses(&self) -> Vec<&str> {
        let mut out: Vec<&str> = self.violations.iter().map(|v| v.clause.as_str()).collect();
        out.dedup();
        out
    }

    /// First recorded witness, if any.
    pub fn first_witness(&self) -> Option<&str> {
        self.violations.iter().find_map(|v| v.witness.as_deref())
    }
}

/// Accumulates violations while a suite runs.
#[derive(Debug)]
pub struct ReportBuilder {
    suite: String,
    seed: u64,
    started: Instant,
    samples: usize,
    violation_count: usize,
    violations: Vec<Violation>,
    verdicts: Vec<Verdict>,
    notes: Vec<String>,
}

impl ReportBuilder {
    pub fn new(suite: impl Into<String>, seed: u64) -> Self {
        ReportBuilder {
            suite: suite.into(),
            seed,
            started: Instant::now(),
            samples: 0,
            violation_count: 0,
            violations: Vec::new(),
            verdicts: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn sample(&mut self) {
        self.samples += 1;
    }

    pub fn samples(&mut self, n: usize) {
        self.samples += n;
    }

    pub fn violation<'a, I>(
        &mut self,
        clause: &str,
        expected: &str,
        inputs: I,
        witness: Option<String>,
    ) where
        I: IntoIterator<Item = (&'a str, String)>,
    {
        self.violation_count += 1;
        if self.violations.len() < MAX_RECORDED_VIOLATIONS {
            self.violations.push(Violation {
                clause: clause.to_string(),
                expected: expected.to_string(),
                inputs: inputs
                    .into_iter()
                    .map(|(k, v)| (k.to_string(), v))
                    .collect(),
                witness,
            });
        }
    }

    /// Records a violation when `holds` is false. Returns `holds`.
    pub fn expect<'a, I>(&mut self, holds: bool, clause: &str, expected: &str, inputs: I) -> bool
    where
        I: IntoIterator<Item = (&'a str, String)>,
    {
        if !holds {
            self.violation(clause, expected, inputs, None);
        }
        holds
    }

    pub fn verdict(&mut self, name: &str, pass: bool, witness: Option<String>) {
        self.verdicts.push(Verdict {
            name: name.to_string(),
            pass,
            witness,
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn violation_count(&self) -> usize {
        self.violation_count
    }

    pub fn finish(self) -> PropertyReport {
        PropertyReport {
            pass: self.violation_count == 0,
            suite: self.suite,
            samples: self.samples,
            seed: self.seed,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
            violation_count: self.violation_count,
            violations: self.violations,
            verdicts: self.verdicts,
            notes: self.notes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_flag_tracks_violations() {
        let mut b = ReportBuilder::new("demo", 3);
        b.sample();
        let ok = b.finish();
        assert!(ok.pass && ok.violations.is_empty());

        let mut b = ReportBuilder::new("demo", 3);
        for i in 0..40 {
            b.violation("c", "x", [("i", i.to_string())], Some("w".into()));
        }
        let bad = b.finish();
        assert!(!bad.pass);
        assert_eq!(bad.violation_count, 40);
        assert_eq!(bad.violations.len(), MAX_RECORDED_VIOLATIONS);
        assert_eq!(bad.violated_clauses(), vec!["c"]);
        assert_eq!(bad.first_witness(), Some("w"));
    }
}
