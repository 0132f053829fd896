//! Check reports: named expected/actual comparisons with a pass flag,
//! serialized as JSON or rendered as TSV (one check per line).

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, name: impl Into<String>, expected: Value, actual: Value) {
        let pass = expected == actual;
        self.checks.push(Check {
            name: name.into(),
            expected,
            actual,
            pass,
        });
    }

    /// A check whose pass flag is decided by the caller; expected/actual are
    /// informational.
    pub fn push_flag(&mut self, name: impl Into<String>, pass: bool, expected: Value, actual: Value) {
        self.checks.push(Check {
            name: name.into(),
            expected,
            actual,
            pass,
        });
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Error with the first failing check, if any.
    pub fn ensure_pass(&self) -> Result<()> {
        match self.checks.iter().find(|c| !c.pass) {
            None => Ok(()),
            Some(c) => Err(Error::VerificationFailed(format!(
                "{}: expected {}, got {}",
                c.name, c.expected, c.actual
            ))),
        }
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                c.name,
                c.expected,
                c.actual,
                if c.pass { "pass" } else { "FAIL" }
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn report_basics() {
        let mut r = Report::new();
        r.push("a", json!(1), json!(1));
        r.push("b", json!([1, 2]), json!([1, 3]));
        assert!(!r.pass());
        assert!(r.checks[0].pass);
        assert!(!r.checks[1].pass);
        assert!(r.ensure_pass().is_err());
        let tsv = r.to_tsv();
        assert!(tsv.contains("a\t1\t1\tpass"));
        assert!(tsv.contains("b\t[1,2]\t[1,3]\tFAIL"));
    }
}
