use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::HermitianMatrix;

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Violate,
}

/// One evaluated inequality `lhs ≤ rhs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckPart {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub rel_slack: f64,
}

impl CheckPart {
    pub fn le(label: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        Self::with_slack(label, lhs, rhs, rhs - lhs)
    }

    /// `big ≥ small`, stored in `small ≤ big` orientation.
    pub fn ge(label: impl Into<String>, big: f64, small: f64) -> Self {
        Self::le(label, small, big)
    }

    pub fn with_slack(label: impl Into<String>, lhs: f64, rhs: f64, slack: f64) -> Self {
        let scale = scale_of(lhs, rhs);
        CheckPart { label: label.into(), lhs, rhs, slack, rel_slack: slack / scale }
    }

    /// Löwner order `lhs ⪯ rhs`: slack is `λ_min(rhs − lhs)`, the reported sides
    /// are the extreme eigenvalues of largest magnitude.
    pub fn loewner(label: impl Into<String>, lhs: &HermitianMatrix, rhs: &HermitianMatrix) -> Result<Self> {
        let slack = rhs.sub(lhs)?.eig()?.min();
        Ok(Self::with_slack(label, signed_extreme(lhs)?, signed_extreme(rhs)?, slack))
    }

    pub fn scale(&self) -> f64 {
        scale_of(self.lhs, self.rhs)
    }

    pub fn passes(&self, tol: f64) -> bool {
        // NaN slack never passes
        self.slack >= -tol * self.scale()
    }
}

fn signed_extreme(h: &HermitianMatrix) -> Result<f64> {
    let e = h.eig()?;
    Ok(if e.max().abs() >= e.min().abs() { e.max() } else { e.min() })
}

pub fn scale_of(lhs: f64, rhs: f64) -> f64 {
    1f64.max(lhs.abs()).max(rhs.abs())
}

/// Evaluated inequality. For a compound statement the headline fields copy
/// the part with the smallest relative slack; `parts` keeps all of them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub rel_slack: f64,
    pub verdict: Verdict,
    pub tol: f64,
    pub parts: Vec<CheckPart>,
}

impl CheckResult {
    pub fn from_parts(parts: Vec<CheckPart>, tol: f64) -> Self {
        assert!(!parts.is_empty(), "a check needs at least one part");
        let worst = parts
            .iter()
            .min_by(|a, b| rel_key(a).total_cmp(&rel_key(b)))
            .expect("non-empty");
        let verdict = if parts.iter().all(|p| p.passes(tol)) { Verdict::Pass } else { Verdict::Violate };
        CheckResult {
            lhs: worst.lhs,
            rhs: worst.rhs,
            slack: worst.slack,
            rel_slack: worst.rel_slack,
            verdict,
            tol,
            parts,
        }
    }

    pub fn single(part: CheckPart) -> Self {
        Self::from_parts(vec![part], DEFAULT_TOL)
    }

    pub fn of(parts: Vec<CheckPart>) -> Self {
        Self::from_parts(parts, DEFAULT_TOL)
    }

    pub fn rejudge(self, tol: f64) -> Self {
        Self::from_parts(self.parts, tol)
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn part(&self, label: &str) -> Option<&CheckPart> {
        self.parts.iter().find(|p| p.label == label)
    }

    /// Keeps only the parts whose label starts with `prefix`.
    pub fn restricted(&self, prefix: &str) -> Option<Self> {
        let parts: Vec<CheckPart> = self.parts.iter().filter(|p| p.label.starts_with(prefix)).cloned().collect();
        (!parts.is_empty()).then(|| Self::from_parts(parts, self.tol))
    }
}

fn rel_key(p: &CheckPart) -> f64 {
    if p.rel_slack.is_nan() {
        f64::NEG_INFINITY
    } else {
        p.rel_slack
    }
}
