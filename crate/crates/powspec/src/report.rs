//! Report records and their JSON form.
//!
//! Key order follows struct field order and nested objects use sorted keys,
//! so a report serializes byte-identically for identical inputs.

use std::fs;
use std::path::Path;

use powspec_core::MatrixKind;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The computation disagrees with a documented closed form or model
    /// assumption. Surfaced, never fatal.
    MismatchReported,
    /// Not run, e.g. the matrix order exceeds the cap.
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::MismatchReported => "mismatch-reported",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    /// Block-matrix model in which `<r>` is a clique.
    Model,
    /// Power graph computed from the group law.
    True,
}

impl Construction {
    pub const BOTH: [Construction; 2] = [Construction::Model, Construction::True];

    pub fn as_str(&self) -> &'static str {
        match self {
            Construction::Model => "model",
            Construction::True => "true",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub k: u32,
    pub p: u64,
    pub n: u64,
    pub m_model: u128,
    pub m_true: u128,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub construction: Option<Construction>,
    pub matrix: Option<String>,
    pub status: Status,
    pub computed: Value,
    pub expected: Value,
    pub tolerance: Option<f64>,
    pub note: Option<String>,
}

impl Check {
    pub fn new(name: &str, anchor: &'static str, status: Status, computed: Value, expected: Value) -> Self {
        Check {
            name: name.to_string(),
            anchor: anchor.to_string(),
            construction: None,
            matrix: None,
            status,
            computed,
            expected,
            tolerance: None,
            note: None,
        }
    }

    pub fn on(mut self, construction: Construction) -> Self {
        self.construction = Some(construction);
        self
    }

    pub fn matrix(mut self, kind: MatrixKind) -> Self {
        self.matrix = Some(kind.name().to_string());
        self
    }

    pub fn tolerance(mut self, tol: f64) -> Self {
        self.tolerance = Some(tol);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub mismatch_reported: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Overall {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub params: Params,
    pub matrix_cap: usize,
    pub tolerance: f64,
    pub checks: Vec<Check>,
    pub summary: Summary,
    pub status: Overall,
}

impl VerificationReport {
    pub fn new(params: Params, matrix_cap: usize, tolerance: f64, checks: Vec<Check>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::MismatchReported => summary.mismatch_reported += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        let status = if summary.fail == 0 { Overall::Pass } else { Overall::Fail };
        VerificationReport { params, matrix_cap, tolerance, checks, summary, status }
    }

    pub fn passed(&self) -> bool {
        self.status == Overall::Pass
    }

    /// 0 when every check is pass, mismatch-reported or skipped, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn find(&self, name: &str, construction: Option<Construction>, matrix: Option<MatrixKind>) -> Option<&Check> {
        self.checks.iter().find(|c| {
            c.name == name
                && construction.is_none_or(|x| c.construction == Some(x))
                && matrix.is_none_or(|m| c.matrix.as_deref() == Some(m.name()))
        })
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json()?).map_err(|e| Error::io(path, e))
    }
}
