use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;

use super::{ConditionVariant, InequalityCase, NormSpec, SampleContext, SpectralCondition};
use crate::error::Result;
use crate::harness::{gen_conditioned_pair, gen_gaussian, gen_positive, log_uniform};
use crate::scalar::WeightVector;

/// Spectrum of generic positive operands.
pub(crate) const SPECTRUM: (f64, f64) = (0.1, 10.0);
/// Range of scalar operands.
pub(crate) const SCALAR_RANGE: (f64, f64) = (1e-2, 1e2);

const PARAM_STREAM: u64 = 0;
const OPERAND_STREAM: u64 = 1;

/// Two independent streams: one for parameters, one for operands, so that
/// changing how a parameter is drawn leaves the operands untouched.
pub(crate) struct Sampler<'a> {
    params: ChaCha8Rng,
    ops: ChaCha8Rng,
    pub ctx: &'a SampleContext,
    pub case: InequalityCase,
}

impl<'a> Sampler<'a> {
    pub fn new(suite_id: &str, seed: u64, dim: usize, ctx: &'a SampleContext) -> Self {
        let mut params = ChaCha8Rng::seed_from_u64(seed);
        params.set_stream(PARAM_STREAM);
        let mut ops = ChaCha8Rng::seed_from_u64(seed);
        ops.set_stream(OPERAND_STREAM);
        Sampler { params, ops, ctx, case: InequalityCase::new(suite_id, dim, seed, ctx.grids.clone()) }
    }

    pub fn dim(&self) -> usize {
        self.case.dim
    }

    pub fn unit(&mut self) -> f64 {
        self.params.random::<f64>()
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.unit() < p
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    pub fn pick(&mut self, values: &[f64]) -> f64 {
        values[self.params.random_range(0..values.len())]
    }

    pub fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        log_uniform(&mut self.params, lo, hi)
    }

    /// `(ρ, σ)` log-uniform, equal 5% of the time.
    pub fn pair(&mut self) {
        let (lo, hi) = SCALAR_RANGE;
        let rho = self.log_uniform(lo, hi);
        let sigma = if self.chance(0.05) { rho } else { self.log_uniform(lo, hi) };
        self.case.scalars = vec![rho, sigma];
    }

    /// κ ∈ [0, 1] with the endpoints and 1/2 drawn 10% of the time.
    pub fn kappa(&mut self) {
        self.case.params.kappa = if self.chance(0.1) { self.pick(&[0.0, 0.5, 1.0]) } else { self.unit() };
    }

    /// κ from the configured grid half the time.
    pub fn kappa_gridded(&mut self) {
        if self.chance(0.5) {
            let grid = self.ctx.grids.kappa.clone();
            self.case.params.kappa = self.pick(&grid);
        } else {
            self.kappa();
        }
    }

    /// κ ∈ (0, 1] and ν ∈ [0, κ).
    pub fn kappa_nu(&mut self) {
        let kappa = if self.chance(0.1) { self.pick(&[0.5, 1.0]) } else { 1.0 - self.unit() };
        let nu = if self.chance(0.1) { 0.0 } else { kappa * self.unit() };
        self.case.params.kappa = kappa;
        self.case.params.nu = nu;
    }

    /// `m ∈ {1, 2, 3}`, `r ∈ [1, 4]`.
    pub fn m_r(&mut self) {
        self.case.params.m = self.params.random_range(1..=3);
        self.case.params.r_exp = if self.chance(0.1) { 1.0 } else { self.uniform(1.0, 4.0) };
    }

    /// `p ∈ (1.05, 10)` log-spaced in `p − 1`, `q` its conjugate.
    pub fn p(&mut self) {
        let p = if self.chance(0.1) { 2.0 } else { 1.0 + self.log_uniform(0.05, 9.0) };
        self.case.params = self.case.params.with_p(p);
    }

    pub fn theta(&mut self) {
        self.case.params.theta = self.unit();
    }

    pub fn mu(&mut self) {
        let grid = self.ctx.grids.mu.clone();
        self.case.params.mu = self.pick(&grid);
    }

    pub fn count(&mut self) -> usize {
        self.params.random_range(2..=3)
    }

    /// Flat Dirichlet weights.
    pub fn dirichlet(&mut self, k: usize) -> Result<()> {
        let g: Vec<f64> = (0..k).map(|_| self.params.sample::<f64, _>(Exp1)).collect();
        self.case.weights = Some(WeightVector::from_weights(normalize(&g))?);
        Ok(())
    }

    /// Raw `γ_k ∈ [0, 2]`.
    pub fn gammas(&mut self, k: usize) -> Result<()> {
        let g: Vec<f64> = (0..k).map(|_| self.uniform(0.0, 2.0)).collect();
        self.case.weights = Some(WeightVector::from_gammas(g)?);
        Ok(())
    }

    pub fn omegas(&mut self, k: usize) {
        let (lo, hi) = SCALAR_RANGE;
        self.case.scalars = if self.chance(0.05) {
            vec![self.log_uniform(lo, hi); k]
        } else {
            (0..k).map(|_| self.log_uniform(lo, hi)).collect()
        };
    }

    pub fn norms(&mut self) {
        self.case.norms = NormSpec::expand(&self.ctx.norms, self.case.dim);
    }

    /// Appends a positive definite operand with spectrum in `SPECTRUM`.
    pub fn positive(&mut self) -> Result<()> {
        let (lo, hi) = SPECTRUM;
        let m = gen_positive(self.case.dim, lo, hi, &mut self.ops)?;
        self.case.operands.push(m.matrix().clone());
        Ok(())
    }

    /// Appends a matrix with independent standard complex Gaussian entries.
    pub fn gaussian(&mut self) {
        let g = gen_gaussian(self.case.dim, &mut self.ops);
        self.case.operands.push(g);
    }

    /// Condition from a sorted log-uniform quadruple, then a pair honoring it.
    pub fn conditioned_pair(&mut self) -> Result<()> {
        let (lo, hi) = SPECTRUM;
        let variant = if self.chance(0.5) { ConditionVariant::A } else { ConditionVariant::B };
        let cond = loop {
            let mut q: Vec<f64> = (0..4).map(|_| self.log_uniform(lo, hi)).collect();
            q.sort_by(f64::total_cmp);
            if let Ok(c) = SpectralCondition::new(q[0], q[1], q[2], q[3], variant) {
                break c;
            }
        };
        let (t, s) = gen_conditioned_pair(self.case.dim, &cond, &mut self.ops)?;
        self.case.condition = Some(cond);
        self.case.operands.push(t.matrix().clone());
        self.case.operands.push(s.matrix().clone());
        Ok(())
    }
}

fn normalize(g: &[f64]) -> Vec<f64> {
    let total: f64 = g.iter().sum();
    let mut w: Vec<f64> = g.iter().map(|x| x / total).collect();
    // put the rounding residue on the last weight so the sum is 1 to the ulp
    let head: f64 = w[..w.len() - 1].iter().sum();
    let last = w.len() - 1;
    w[last] = (1.0 - head).max(0.0);
    w
}
