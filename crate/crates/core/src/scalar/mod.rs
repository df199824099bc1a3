//! Scalar means and the scalar Young/Heinz/Kantorovich-type checks.
//!
//! Conventions: `ρ♯_κσ = ρ^κ σ^{1−κ}` and `ρ∇_κσ = κρ + (1−κ)σ`.

mod checks;
mod result;

pub use checks::*;
pub use result::{scale_of, CheckPart, CheckResult, Verdict, DEFAULT_TOL};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalarPair {
    pub rho: f64,
    pub sigma: f64,
}

impl ScalarPair {
    pub fn new(rho: f64, sigma: f64) -> Result<Self> {
        let pair = ScalarPair { rho, sigma };
        pair.validate()?;
        Ok(pair)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("rho", self.rho), ("sigma", self.sigma)] {
            if !v.is_finite() {
                return Err(Error::NonFinite("scalar pair"));
            }
            if v <= 0.0 {
                return Err(Error::param(format!("{name} must be > 0, got {v}")));
            }
        }
        Ok(())
    }

    pub fn swapped(self) -> Self {
        ScalarPair { rho: self.sigma, sigma: self.rho }
    }
}

/// Every scalar parameter a check may consume. Unused fields are ignored.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightParams {
    pub kappa: f64,
    pub nu: f64,
    pub m: u32,
    pub r_exp: f64,
    pub p: f64,
    pub q: f64,
    pub theta: f64,
    pub mu: f64,
    /// Denominator parameter of the HHM2 kernel and of the chain bound, in (−2, 2].
    pub t: f64,
    /// Numerator exponent of the HHM2 kernel, in [−1, 1].
    pub power: f64,
}

impl Default for WeightParams {
    fn default() -> Self {
        WeightParams { kappa: 0.5, nu: 0.25, m: 1, r_exp: 1.0, p: 2.0, q: 2.0, theta: 0.5, mu: 0.5, t: 0.0, power: 0.0 }
    }
}

impl WeightParams {
    pub fn with_kappa(kappa: f64) -> Self {
        WeightParams { kappa, ..Default::default() }
    }

    /// Sets `p` and its conjugate `q = p/(p−1)`.
    pub fn with_p(mut self, p: f64) -> Self {
        self.p = p;
        self.q = p / (p - 1.0);
        self
    }

    pub(crate) fn require_unit(name: &str, v: f64) -> Result<()> {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::param(format!("{name} must lie in [0, 1], got {v}")));
        }
        Ok(())
    }

    pub(crate) fn require_kappa(&self) -> Result<()> {
        Self::require_unit("kappa", self.kappa)
    }

    /// `0 ≤ ν < κ ≤ 1`.
    pub(crate) fn require_nu_below_kappa(&self) -> Result<()> {
        self.require_kappa()?;
        if !(self.nu >= 0.0 && self.nu < self.kappa) {
            return Err(Error::param(format!("need 0 <= nu < kappa, got nu = {}, kappa = {}", self.nu, self.kappa)));
        }
        Ok(())
    }

    pub(crate) fn require_m_r(&self) -> Result<()> {
        if self.m < 1 {
            return Err(Error::param("m must be a positive integer"));
        }
        if !(self.r_exp >= 1.0) || !self.r_exp.is_finite() {
            return Err(Error::param(format!("r must be >= 1, got {}", self.r_exp)));
        }
        Ok(())
    }

    pub(crate) fn require_conjugate(&self) -> Result<()> {
        if !(self.p > 1.0 && self.q > 1.0) || (1.0 / self.p + 1.0 / self.q - 1.0).abs() > 1e-12 {
            return Err(Error::param(format!("p = {}, q = {} are not conjugate exponents > 1", self.p, self.q)));
        }
        Ok(())
    }

    /// `r₀ = min{1/p, 1/q}`.
    pub fn r0(&self) -> f64 {
        (1.0 / self.p).min(1.0 / self.q)
    }
}

/// Weights `ϑ_k = γ_k / Γ_n` together with the raw `γ_k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightVector {
    pub weights: Vec<f64>,
    pub gammas: Vec<f64>,
    pub gamma_total: f64,
}

impl WeightVector {
    pub fn from_weights(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::param("weight vector is empty"));
        }
        if weights.iter().any(|w| !(0.0..=1.0).contains(w)) {
            return Err(Error::param("weights must lie in [0, 1]"));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::param(format!("weights must sum to 1, got {sum}")));
        }
        Ok(WeightVector { gammas: weights.clone(), weights, gamma_total: 1.0 })
    }

    pub fn from_gammas(gammas: Vec<f64>) -> Result<Self> {
        if gammas.is_empty() {
            return Err(Error::param("weight vector is empty"));
        }
        if gammas.iter().any(|g| !(g.is_finite() && *g >= 0.0)) {
            return Err(Error::param("gammas must be finite and non-negative"));
        }
        let total: f64 = gammas.iter().sum();
        if total <= 0.0 {
            return Err(Error::param("Gamma_n = sum of gammas must be > 0"));
        }
        Ok(WeightVector { weights: gammas.iter().map(|g| g / total).collect(), gammas, gamma_total: total })
    }

    pub fn uniform(n: usize) -> Self {
        Self::from_gammas(vec![1.0; n]).expect("n >= 1")
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn min_weight(&self) -> f64 {
        self.weights.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Drops entry `k` and renormalizes; `None` if that would leave nothing.
    pub fn without(&self, k: usize) -> Option<Self> {
        if self.len() <= 1 {
            return None;
        }
        let mut g = self.gammas.clone();
        g.remove(k);
        Self::from_gammas(g).ok()
    }
}

/// `K(t, 2) = (t + 1)² / (4t)`.
pub fn kantorovich(t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::param(format!("Kantorovich constant needs t > 0, got {t}")));
    }
    Ok((t + 1.0) * (t + 1.0) / (4.0 * t))
}

pub(crate) fn kant(t: f64) -> f64 {
    (t + 1.0) * (t + 1.0) / (4.0 * t)
}

/// `ρ^κ σ^{1−κ}`, evaluated as `σ(ρ/σ)^κ` so that ρ = σ and κ = 0 are exact.
pub fn sharp(rho: f64, sigma: f64, kappa: f64) -> f64 {
    sigma * (rho / sigma).powf(kappa)
}

/// `κρ + (1−κ)σ`.
pub fn nabla(rho: f64, sigma: f64, kappa: f64) -> f64 {
    kappa * rho + (1.0 - kappa) * sigma
}

/// `(ρ♯_κσ + ρ♯_{1−κ}σ)/2`.
///
/// κ is first mapped to the upper half `[1/2, 1]` (where `1 − κ` is exact), so
/// κ and `1 − κ` share one arithmetic path and the result is bit-symmetric.
pub fn heinz(rho: f64, sigma: f64, kappa: f64) -> f64 {
    let upper = if kappa < 0.5 { 1.0 - kappa } else { kappa };
    let d = upper - 0.5;
    let x = rho / sigma;
    (rho * sigma).sqrt() * (x.powf(d) + x.powf(-d)) * 0.5
}

/// `(1−ϑ)√(ρσ) + ϑ(ρ+σ)/2`.
pub fn heron(rho: f64, sigma: f64, theta: f64) -> f64 {
    (1.0 - theta) * (rho * sigma).sqrt() + theta * (rho + sigma) * 0.5
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalarMeans {
    pub arith_nabla: f64,
    pub geom_sharp: f64,
    pub heinz: f64,
    pub heron: f64,
}

pub fn scalar_means(pair: &ScalarPair, params: &WeightParams) -> Result<ScalarMeans> {
    pair.validate()?;
    params.require_kappa()?;
    if !(params.theta >= 0.0) || !params.theta.is_finite() {
        return Err(Error::param(format!("theta must be >= 0, got {}", params.theta)));
    }
    let (rho, sigma, k) = (pair.rho, pair.sigma, params.kappa);
    Ok(ScalarMeans {
        arith_nabla: nabla(rho, sigma, k),
        geom_sharp: sharp(rho, sigma, k),
        heinz: heinz(rho, sigma, k),
        heron: heron(rho, sigma, params.theta),
    })
}
