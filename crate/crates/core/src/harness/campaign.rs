use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::shrink::shrink;
use crate::error::{Error, Result};
use crate::scalar::{CheckResult, DEFAULT_TOL};
use crate::suites::{InequalityCase, InequalitySuite, NormSpec, ParameterGrids, SampleContext, SuiteRegistry, SuiteShape, SuiteStatus};

pub const ARTIFACT_VERSION: &str = concat!("heinzlab ", env!("CARGO_PKG_VERSION"));

const MAX_DIM: usize = 64;
const MAX_TRIALS: u64 = 10_000_000;
const MAX_EVALUATIONS: u64 = 100_000_000;
const DIM_STREAM: u64 = 2;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub suites: Vec<String>,
    pub trials: u64,
    pub dim_min: usize,
    pub dim_max: usize,
    pub seed: u64,
    pub tol_rel: f64,
    pub norm_family: Vec<NormSpec>,
    pub parameter_grids: ParameterGrids,
    /// Evaluate trials on the rayon pool. Does not affect the report.
    #[serde(skip, default = "yes")]
    pub parallel: bool,
}

fn yes() -> bool {
    true
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            suites: vec!["all".into()],
            trials: 1000,
            dim_min: 1,
            dim_max: 6,
            seed: 0,
            tol_rel: DEFAULT_TOL,
            norm_family: NormSpec::standard(),
            parameter_grids: ParameterGrids::default(),
            parallel: true,
        }
    }
}

impl CampaignConfig {
    pub fn for_suite(id: &str) -> Self {
        CampaignConfig { suites: vec![id.to_string()], ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::param("trials must be >= 1"));
        }
        if self.dim_min == 0 || self.dim_min > self.dim_max {
            return Err(Error::param(format!("need 1 <= dim_min <= dim_max, got {}..{}", self.dim_min, self.dim_max)));
        }
        if !(self.tol_rel > 0.0 && self.tol_rel.is_finite()) {
            return Err(Error::param(format!("tol_rel must be > 0, got {}", self.tol_rel)));
        }
        if self.norm_family.is_empty() {
            return Err(Error::param("norm family is empty"));
        }
        if self.suites.is_empty() {
            return Err(Error::param("no suites selected"));
        }
        if self.dim_max > MAX_DIM {
            return Err(Error::ResourceCap(format!("dim_max {} exceeds {MAX_DIM}", self.dim_max)));
        }
        if self.trials > MAX_TRIALS {
            return Err(Error::ResourceCap(format!("trials {} exceeds {MAX_TRIALS}", self.trials)));
        }
        Ok(())
    }

    pub fn context(&self) -> SampleContext {
        SampleContext { norms: self.norm_family.clone(), grids: self.parameter_grids.clone() }
    }
}

/// A violation reduced by the shrinker.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub trial: u64,
    pub original_dim: usize,
    pub case: InequalityCase,
    pub result: CheckResult,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteRecord {
    pub id: String,
    pub status: SuiteStatus,
    pub recorded_not_asserted: bool,
    pub trials: u64,
    pub violations: u64,
    /// Trials whose sampling or evaluation failed.
    pub errors: u64,
    pub numerical_failures: u64,
    pub worst_slack: Option<f64>,
    pub worst_rel_slack: Option<f64>,
    pub worst_case: Option<InequalityCase>,
    pub counterexample: Option<Counterexample>,
    pub first_error: Option<String>,
}

impl SuiteRecord {
    /// An asserted suite with at least one violation.
    pub fn failed(&self) -> bool {
        !self.recorded_not_asserted && self.violations > 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub version: String,
    pub config: CampaignConfig,
    pub suites: Vec<SuiteRecord>,
    /// Kept out of the serialized report so that reruns are byte-identical.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CampaignReport {
    pub fn failed(&self) -> bool {
        self.suites.iter().any(SuiteRecord::failed)
    }

    pub fn numerical_failures(&self) -> u64 {
        self.suites.iter().map(|s| s.numerical_failures).sum()
    }

    pub fn suite(&self, id: &str) -> Option<&SuiteRecord> {
        self.suites.iter().find(|s| s.id == id)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Format(e.to_string()))
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// `seed ⊕ hash(suite_id, trial)`.
pub fn trial_seed(seed: u64, suite_id: &str, trial: u64) -> u64 {
    seed ^ splitmix64(fnv1a(suite_id) ^ splitmix64(trial))
}

/// Dimension of a trial, uniform in `[dim_min, dim_max]`, from its own stream.
pub fn trial_dim(trial_seed: u64, dim_min: usize, dim_max: usize) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
    rng.set_stream(DIM_STREAM);
    rng.random_range(dim_min..=dim_max)
}

enum Outcome {
    Evaluated { slack: f64, rel_slack: f64, violated: bool },
    Failed { numerical: bool, message: String },
}

fn sample_trial(suite: &dyn InequalitySuite, cfg: &CampaignConfig, ctx: &SampleContext, trial: u64) -> Result<InequalityCase> {
    let seed = trial_seed(cfg.seed, suite.id(), trial);
    let dim = match suite.shape() {
        SuiteShape::Scalar => 1,
        SuiteShape::Matrix => trial_dim(seed, cfg.dim_min, cfg.dim_max),
    };
    suite.sample(seed, dim, ctx)
}

fn run_trial(suite: &dyn InequalitySuite, cfg: &CampaignConfig, ctx: &SampleContext, trial: u64) -> Outcome {
    let evaluated = sample_trial(suite, cfg, ctx, trial).and_then(|case| suite.evaluate(&case));
    match evaluated {
        Ok(r) => {
            let r = r.rejudge(cfg.tol_rel);
            Outcome::Evaluated { slack: r.slack, rel_slack: r.rel_slack, violated: !r.passed() }
        }
        Err(e) => Outcome::Failed { numerical: e.is_numerical(), message: e.to_string() },
    }
}

fn rel_key(x: f64) -> f64 {
    if x.is_nan() {
        f64::NEG_INFINITY
    } else {
        x
    }
}

fn run_suite(suite: &dyn InequalitySuite, cfg: &CampaignConfig, ctx: &SampleContext) -> Result<SuiteRecord> {
    let outcomes: Vec<Outcome> = if cfg.parallel {
        (0..cfg.trials).into_par_iter().map(|i| run_trial(suite, cfg, ctx, i)).collect()
    } else {
        (0..cfg.trials).map(|i| run_trial(suite, cfg, ctx, i)).collect()
    };
    let recorded = suite.status() == SuiteStatus::Recorded;
    let mut rec = SuiteRecord {
        id: suite.id().to_string(),
        status: suite.status(),
        recorded_not_asserted: recorded,
        trials: cfg.trials,
        violations: 0,
        errors: 0,
        numerical_failures: 0,
        worst_slack: None,
        worst_rel_slack: None,
        worst_case: None,
        counterexample: None,
        first_error: None,
    };
    let mut worst: Option<(u64, f64, f64)> = None;
    let mut first_violation = None;
    for (i, o) in outcomes.into_iter().enumerate() {
        let i = i as u64;
        match o {
            Outcome::Evaluated { slack, rel_slack, violated } => {
                if violated {
                    rec.violations += 1;
                    first_violation.get_or_insert(i);
                }
                if worst.is_none_or(|(_, _, w)| rel_key(rel_slack) < rel_key(w)) {
                    worst = Some((i, slack, rel_slack));
                }
            }
            Outcome::Failed { numerical, message } => {
                rec.errors += 1;
                if numerical {
                    rec.numerical_failures += 1;
                }
                rec.first_error.get_or_insert(format!("trial {i}: {message}"));
            }
        }
    }
    if let Some((i, slack, rel)) = worst {
        rec.worst_slack = Some(slack);
        rec.worst_rel_slack = Some(rel);
        rec.worst_case = Some(sample_trial(suite, cfg, ctx, i)?);
    }
    if let Some(i) = first_violation {
        let case = sample_trial(suite, cfg, ctx, i)?;
        let original_dim = case.dim;
        let small = shrink(suite, &case, cfg.tol_rel)?;
        let result = suite.evaluate(&small)?.rejudge(cfg.tol_rel);
        rec.counterexample = Some(Counterexample { trial: i, original_dim, case: small, result });
    }
    Ok(rec)
}

/// Runs every selected suite for `cfg.trials` trials. The report depends only on `cfg`.
pub fn run_campaign(registry: &SuiteRegistry, cfg: &CampaignConfig) -> Result<CampaignReport> {
    cfg.validate()?;
    let suites = registry.resolve(&cfg.suites)?;
    if cfg.trials.saturating_mul(suites.len() as u64) > MAX_EVALUATIONS {
        return Err(Error::ResourceCap(format!("{} trials x {} suites exceeds {MAX_EVALUATIONS}", cfg.trials, suites.len())));
    }
    let start = Instant::now();
    let ctx = cfg.context();
    let records = suites.iter().map(|s| run_suite(*s, cfg, &ctx)).collect::<Result<Vec<_>>>()?;
    Ok(CampaignReport { version: ARTIFACT_VERSION.to_string(), config: cfg.clone(), suites: records, wall_time: start.elapsed() })
}
