//! Run reports: one record per check plus a summary, serialized with a fixed
//! field order so identical runs produce identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use detident::matrix_file::MatrixJson;
use detident::IdentityReport;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Invocation {
    pub name: String,
    pub params: BTreeMap<String, String>,
}

impl Invocation {
    pub fn new(name: &str) -> Self {
        Invocation {
            name: name.to_string(),
            params: BTreeMap::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    pub operands: String,
    pub residual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trial: Option<u64>,
    pub check: String,
    pub operands: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checked: Option<usize>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<WitnessRecord>,
}

impl CheckRecord {
    pub fn new(check: &str, operands: impl Into<String>, pass: bool) -> Self {
        CheckRecord {
            trial: None,
            check: check.to_string(),
            operands: operands.into(),
            value: None,
            checked: None,
            pass,
            detail: None,
            witnesses: Vec::new(),
        }
    }

    pub fn value(mut self, value: impl ToString) -> Self {
        self.value = Some(value.to_string());
        self
    }

    pub fn detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn checked(mut self, count: usize) -> Self {
        self.checked = Some(count);
        self
    }

    pub fn witness(mut self, operands: impl Into<String>, residual: impl ToString) -> Self {
        self.witnesses.push(WitnessRecord {
            operands: operands.into(),
            residual: residual.to_string(),
        });
        self
    }

    /// A record for a single residual that must be exactly zero.
    pub fn residual(check: &str, operands: impl Into<String>, residual: &detident::Scalar) -> Self {
        CheckRecord::new(check, operands, residual.is_zero()).value(residual)
    }

    pub fn from_identity(report: &IdentityReport) -> Self {
        let (rows, cols) = report.dims;
        let mut record = CheckRecord::new(report.identity.name(), format!("{rows}x{cols}"), report.passed())
            .checked(report.residuals_checked);
        for w in &report.witnesses {
            record = record.witness(w.selection.to_string(), &w.residual);
        }
        record
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub command: Invocation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixJson>,
    pub results: Vec<CheckRecord>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(command: Invocation, seed: Option<u64>, results: Vec<CheckRecord>) -> Self {
        let passed = results.iter().filter(|r| r.pass).count();
        let failed = results.len() - passed;
        RunReport {
            command,
            seed,
            matrix: None,
            summary: Summary {
                checks: results.len(),
                passed,
                failed,
                pass: failed == 0,
            },
            results,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.pass {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per record, witnesses indented beneath, then the summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            if let Some(t) = r.trial {
                let _ = write!(out, "trial={t} ");
            }
            let _ = write!(out, "{} {}", r.check, r.operands);
            if let Some(v) = &r.value {
                let _ = write!(out, " value={v}");
            }
            if let Some(c) = r.checked {
                let _ = write!(out, " checked={c}");
            }
            if let Some(d) = &r.detail {
                let _ = write!(out, " {d}");
            }
            let _ = writeln!(out, " {}", if r.pass { "PASS" } else { "FAIL" });
            for w in &r.witnesses {
                let _ = writeln!(out, "  witness {} residual={}", w.operands, w.residual);
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "summary checks={} passed={} failed={} {}",
            s.checks,
            s.passed,
            s.failed,
            if s.pass { "PASS" } else { "FAIL" }
        );
        out
    }
}
