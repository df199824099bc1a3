//! Inequality suites: one sampled, evaluated statement per stable id.

mod catalog;
mod checks;
mod sampling;

pub use checks::*;
pub(crate) use sampling::Sampler;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{loewner_gap, ComplexMatrix, HermitianMatrix, NormSelector, PositiveMatrix};
use crate::scalar::{CheckResult, WeightParams, WeightVector};

/// Asserted suites fail a campaign on violation; recorded ones only report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteStatus {
    Asserted,
    Recorded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteShape {
    Scalar,
    Matrix,
}

/// How an operand transforms under the conjugation `(U, V)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperandRole {
    /// `UAU*`
    Left,
    /// `VAV*`
    Right,
    /// `UAV*`
    Cross,
}

/// Parameters a shrinker may pull toward their interior targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamField {
    Kappa,
    Nu,
    M,
    RExp,
    P,
    Theta,
    Mu,
    T,
    Power,
}

impl ParamField {
    pub fn get(self, p: &WeightParams) -> f64 {
        match self {
            ParamField::Kappa => p.kappa,
            ParamField::Nu => p.nu,
            ParamField::M => p.m as f64,
            ParamField::RExp => p.r_exp,
            ParamField::P => p.p,
            ParamField::Theta => p.theta,
            ParamField::Mu => p.mu,
            ParamField::T => p.t,
            ParamField::Power => p.power,
        }
    }

    /// Sets the field; `P` also resets `q` to the conjugate exponent.
    pub fn set(self, p: &mut WeightParams, v: f64) {
        match self {
            ParamField::Kappa => p.kappa = v,
            ParamField::Nu => p.nu = v,
            ParamField::M => p.m = v.round().max(1.0) as u32,
            ParamField::RExp => p.r_exp = v,
            ParamField::P => *p = p.with_p(v),
            ParamField::Theta => p.theta = v,
            ParamField::Mu => p.mu = v,
            ParamField::T => p.t = v,
            ParamField::Power => p.power = v,
        }
    }

    pub fn target(self, p: &WeightParams) -> f64 {
        match self {
            ParamField::Kappa | ParamField::Theta | ParamField::Mu => 0.5,
            ParamField::Nu => p.kappa / 2.0,
            ParamField::M => 1.0,
            ParamField::RExp | ParamField::P => 2.0,
            ParamField::T | ParamField::Power => 0.0,
        }
    }

    pub fn is_integer(self) -> bool {
        self == ParamField::M
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConditionVariant {
    A,
    B,
}

/// Spectral side conditions of the operator Heinz refinements.
///
/// Variant a: `mI ≤ T ≤ m′I < M′I ≤ S ≤ MI`. Variant b: `mI ≤ S ≤ m′I ≤ T ≤ MI`
/// (`M′` is unused).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralCondition {
    pub m: f64,
    pub m_prime: f64,
    #[serde(rename = "M_prime")]
    pub big_m_prime: f64,
    #[serde(rename = "M")]
    pub big_m: f64,
    pub variant: ConditionVariant,
}

impl SpectralCondition {
    pub fn new(m: f64, m_prime: f64, big_m_prime: f64, big_m: f64, variant: ConditionVariant) -> Result<Self> {
        let c = SpectralCondition { m, m_prime, big_m_prime, big_m, variant };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        let vals = [self.m, self.m_prime, self.big_m_prime, self.big_m];
        if vals.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("spectral condition"));
        }
        let ok = match self.variant {
            ConditionVariant::A => {
                0.0 < self.m && self.m <= self.m_prime && self.m_prime < self.big_m_prime && self.big_m_prime <= self.big_m
            }
            ConditionVariant::B => 0.0 < self.m && self.m <= self.m_prime && self.m_prime <= self.big_m,
        };
        if !ok || self.h() <= 1.0 {
            return Err(Error::param(format!("inconsistent spectral condition {self:?}")));
        }
        Ok(())
    }

    /// `h = M/m`.
    pub fn h(&self) -> f64 {
        self.big_m / self.m
    }

    /// Interval that must contain the spectrum of `T^{−1/2}ST^{−1/2}`.
    pub fn inner_window(&self) -> (f64, f64) {
        match self.variant {
            ConditionVariant::A => (self.big_m_prime / self.m_prime, self.big_m / self.m),
            ConditionVariant::B => (self.m / self.big_m, 1.0),
        }
    }

    /// `(lo, hi)` spectral intervals for `T` and for `S`.
    pub fn intervals(&self) -> ((f64, f64), (f64, f64)) {
        match self.variant {
            ConditionVariant::A => ((self.m, self.m_prime), (self.big_m_prime, self.big_m)),
            ConditionVariant::B => ((self.m_prime, self.big_m), (self.m, self.m_prime)),
        }
    }

    /// Checks both operands against their intervals in the Löwner order.
    pub fn check_operands(&self, t: &PositiveMatrix, s: &PositiveMatrix) -> Result<()> {
        let ((tl, th), (sl, sh)) = self.intervals();
        for (name, a, lo, hi) in [("T", t, tl, th), ("S", s, sl, sh)] {
            let n = a.dim();
            let h = a.hermitian();
            let below = loewner_gap(&HermitianMatrix::scalar_multiple(n, lo), h)?;
            let above = loewner_gap(h, &HermitianMatrix::scalar_multiple(n, hi))?;
            let allowed = -CONDITION_TOL * hi;
            if below < allowed || above < allowed {
                return Err(Error::param(format!(
                    "{name} violates its spectral interval [{lo}, {hi}] (gaps {below:.3e}, {above:.3e})"
                )));
            }
        }
        Ok(())
    }
}

const CONDITION_TOL: f64 = 1e-9;

/// Fixed parameter grids, echoed in every case and report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParameterGrids {
    pub version: u32,
    /// `ϑ ∈ [0, 1/2]`, compared against the value at 1/2.
    pub theta_low: Vec<f64>,
    /// `ϑ ∈ [1/2, ∞)`, compared pairwise along the grid.
    pub theta_high: Vec<f64>,
    pub chain_t: Vec<f64>,
    pub mu: Vec<f64>,
    pub kappa: Vec<f64>,
}

impl Default for ParameterGrids {
    fn default() -> Self {
        ParameterGrids {
            version: 1,
            theta_low: vec![0.0, 0.1, 0.2, 0.3, 0.4, 0.5],
            theta_high: vec![0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0],
            chain_t: vec![-1.9, -1.0, 0.0, 1.0, 2.0],
            mu: vec![0.25, 0.5, 0.75],
            kappa: (0..=10).map(|i| i as f64 / 10.0).collect(),
        }
    }
}

/// A norm family entry: a concrete selector or every Ky Fan norm of the case dimension.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NormSpec {
    KyFanAll,
    Single(NormSelector),
}

impl NormSpec {
    pub fn standard() -> Vec<NormSpec> {
        let mut out = vec![NormSpec::KyFanAll];
        out.extend([1.0, 2.0, 3.0, f64::INFINITY].map(|p| NormSpec::Single(NormSelector::Schatten(p))));
        out
    }

    /// Concrete selectors for `dim`; Ky Fan indices above `dim` are dropped, duplicates removed.
    pub fn expand(specs: &[NormSpec], dim: usize) -> Vec<NormSelector> {
        let mut out: Vec<NormSelector> = Vec::new();
        for spec in specs {
            let items: Vec<NormSelector> = match spec {
                NormSpec::KyFanAll => (1..=dim).map(NormSelector::KyFan).collect(),
                NormSpec::Single(s) => vec![s.canonical()],
            };
            for s in items {
                if s.validate(dim).is_ok() && !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        out
    }
}

impl fmt::Display for NormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormSpec::KyFanAll => write!(f, "kyfan:all"),
            NormSpec::Single(s) => write!(f, "{s}"),
        }
    }
}

impl FromStr for NormSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("kyfan:all") {
            return Ok(NormSpec::KyFanAll);
        }
        Ok(NormSpec::Single(s.parse()?))
    }
}

impl Serialize for NormSpec {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for NormSpec {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// What a sampler needs beyond the seed and dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleContext {
    pub norms: Vec<NormSpec>,
    pub grids: ParameterGrids,
}

impl Default for SampleContext {
    fn default() -> Self {
        SampleContext { norms: NormSpec::standard(), grids: ParameterGrids::default() }
    }
}

/// One fully specified instance of a suite.
///
/// `scalars` carries the scalar operands: `(ρ, σ)` for pair suites, `ω_k` for the
/// weighted scalar lemmas, `κ_i` for the kernel test.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InequalityCase {
    pub suite_id: String,
    pub dim: usize,
    pub seed: u64,
    pub params: WeightParams,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condition: Option<SpectralCondition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightVector>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub scalars: Vec<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub norms: Vec<NormSelector>,
    pub grids: ParameterGrids,
    #[serde(default)]
    pub operands: Vec<ComplexMatrix>,
}

impl InequalityCase {
    pub fn new(suite_id: &str, dim: usize, seed: u64, grids: ParameterGrids) -> Self {
        InequalityCase {
            suite_id: suite_id.to_string(),
            dim,
            seed,
            params: WeightParams::default(),
            condition: None,
            weights: None,
            scalars: Vec::new(),
            norms: Vec::new(),
            grids,
            operands: Vec::new(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let case: InequalityCase = serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))?;
        for op in &case.operands {
            if op.dim() != case.dim {
                return Err(Error::DimMismatch { left: case.dim, right: op.dim() });
            }
        }
        Ok(case)
    }

    pub(crate) fn operand(&self, k: usize) -> Result<&ComplexMatrix> {
        self.operands
            .get(k)
            .ok_or_else(|| Error::param(format!("case `{}` lacks operand {k}", self.suite_id)))
    }

    pub(crate) fn definite(&self, k: usize) -> Result<PositiveMatrix> {
        PositiveMatrix::definite_from_matrix(self.operand(k)?.clone())
    }

    pub(crate) fn semidefinite(&self, k: usize) -> Result<PositiveMatrix> {
        PositiveMatrix::from_matrix(self.operand(k)?.clone())
    }

    pub(crate) fn weight_vector(&self) -> Result<&WeightVector> {
        self.weights.as_ref().ok_or_else(|| Error::param(format!("case `{}` lacks weights", self.suite_id)))
    }

    pub(crate) fn norm_list(&self) -> Result<&[NormSelector]> {
        if self.norms.is_empty() {
            return Err(Error::param("case carries no norms"));
        }
        for s in &self.norms {
            s.validate(self.dim)?;
        }
        Ok(&self.norms)
    }
}

pub trait InequalitySuite: Send + Sync {
    /// Stable identifier used by the CLI and in reports.
    fn id(&self) -> &'static str;

    /// Short human-readable name.
    fn title(&self) -> &'static str;

    /// The inequality in plain notation.
    fn statement(&self) -> &'static str;

    fn status(&self) -> SuiteStatus;

    fn shape(&self) -> SuiteShape;

    /// Draws an instance; identical arguments give identical cases.
    fn sample(&self, seed: u64, dim: usize, ctx: &SampleContext) -> Result<InequalityCase>;

    /// Pure evaluation of a stored instance.
    fn evaluate(&self, case: &InequalityCase) -> Result<CheckResult>;

    /// An instance where both sides coincide analytically.
    fn equality_case(&self, _dim: usize, _ctx: &SampleContext) -> Option<InequalityCase> {
        None
    }

    /// For a 1×1 case, the same parts recomputed from scalar formulas.
    fn scalar_counterpart(&self, _case: &InequalityCase) -> Option<Result<CheckResult>> {
        None
    }

    /// How each operand moves under unitary conjugation; empty if the statement
    /// is not conjugation-invariant or has no matrix operands.
    fn operand_roles(&self) -> &[OperandRole] {
        &[]
    }

    fn param_fields(&self) -> &[ParamField] {
        &[]
    }

    /// Excluded from the `all` selection.
    fn internal(&self) -> bool {
        false
    }
}

pub struct SuiteRegistry {
    suites: Vec<Box<dyn InequalitySuite>>,
}

impl SuiteRegistry {
    pub fn empty() -> Self {
        SuiteRegistry { suites: Vec::new() }
    }

    /// Every built-in suite plus the self-test.
    pub fn standard() -> Self {
        let mut reg = Self::empty();
        for s in catalog::all() {
            reg.register(s).expect("built-in ids are unique");
        }
        reg
    }

    pub fn register(&mut self, suite: Box<dyn InequalitySuite>) -> Result<()> {
        if self.suites.iter().any(|s| s.id() == suite.id()) {
            return Err(Error::param(format!("duplicate suite id `{}`", suite.id())));
        }
        self.suites.push(suite);
        Ok(())
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.suites.iter().map(|s| s.id()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn InequalitySuite> {
        self.suites.iter().map(|s| s.as_ref())
    }

    pub fn get(&self, id: &str) -> Result<&dyn InequalitySuite> {
        self.iter().find(|s| s.id() == id).ok_or_else(|| Error::UnknownSuite {
            id: id.to_string(),
            valid: self.ids().into_iter().map(String::from).collect(),
        })
    }

    /// Resolves a selection; `all` expands to every non-internal suite.
    /// The result is deduplicated and keeps registry order.
    pub fn resolve(&self, selection: &[String]) -> Result<Vec<&dyn InequalitySuite>> {
        let mut want: Vec<&str> = Vec::new();
        for name in selection {
            if name == "all" {
                want.extend(self.iter().filter(|s| !s.internal()).map(|s| s.id()));
            } else {
                want.push(self.get(name)?.id());
            }
        }
        Ok(self.iter().filter(|s| want.contains(&s.id())).collect())
    }

    /// Evaluates a case with the suite named in it.
    pub fn evaluate(&self, case: &InequalityCase) -> Result<CheckResult> {
        self.get(&case.suite_id)?.evaluate(case)
    }
}

impl Default for SuiteRegistry {
    fn default() -> Self {
        Self::standard()
    }
}
