use serde::{Deserialize, Serialize};

use super::{norms_of, MeanInputs};
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, NormSelector, PositiveMatrix};

/// A matrix monotone function `f: (0,∞) → (0,∞)` with `f*(x) = x / f(x)`.
#[derive(Clone, Copy, Debug)]
pub struct MonotoneFunctionSpec {
    pub name: &'static str,
    pub f: fn(f64) -> f64,
}

impl PartialEq for MonotoneFunctionSpec {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl MonotoneFunctionSpec {
    pub const SQRT: MonotoneFunctionSpec = MonotoneFunctionSpec { name: "sqrt", f: f64::sqrt };
    pub const LOG1P: MonotoneFunctionSpec = MonotoneFunctionSpec { name: "log1p", f: f64::ln_1p };

    pub fn builtin() -> [MonotoneFunctionSpec; 2] {
        [Self::SQRT, Self::LOG1P]
    }

    pub fn by_name(name: &str) -> Result<Self> {
        Self::builtin()
            .into_iter()
            .find(|s| s.name == name)
            .ok_or_else(|| Error::param(format!("unknown monotone function `{name}` (known: sqrt, log1p)")))
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    pub fn star(&self, x: f64) -> f64 {
        x / (self.f)(x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorollaryVariant {
    /// `½|||T^{μ/2}(f(T^μ)Xf*(S^μ) + f*(T^μ)Xf(S^μ))S^{μ/2}|||`
    Rahma2,
    /// `η/(2f(η)) · |||T^{μ/2}(f(T^μ)X + Xf(S^μ))S^{μ/2}|||`, `η = min{sp(T), sp(S)}`
    Boshra1,
}

/// The matrix inside the corollary norm together with its scalar prefactor.
pub(crate) fn corollary_matrix(inp: &MeanInputs, func: MonotoneFunctionSpec, variant: CorollaryVariant) -> Result<(f64, ComplexMatrix)> {
    let mu = inp.mu;
    let t_mu: PositiveMatrix = inp.t.power(mu)?;
    let s_mu: PositiveMatrix = inp.s.power(mu)?;
    let t_half = inp.t.power(mu / 2.0)?;
    let s_half = inp.s.power(mu / 2.0)?;
    let x = &inp.x;
    let f_t = t_mu.apply(|v| func.eval(v))?;
    let f_s = s_mu.apply(|v| func.eval(v))?;
    let (factor, middle) = match variant {
        CorollaryVariant::Rahma2 => {
            let fs_t = t_mu.apply(|v| func.star(v))?;
            let fs_s = s_mu.apply(|v| func.star(v))?;
            let left = f_t.matrix() * &(x * fs_s.matrix());
            let right = fs_t.matrix() * &(x * f_s.matrix());
            (0.5, &left + &right)
        }
        CorollaryVariant::Boshra1 => {
            let eta = inp.eta();
            let fe = func.eval(eta);
            let factor = eta / (2.0 * fe);
            if !factor.is_finite() {
                return Err(Error::Domain { eigenvalue: eta });
            }
            (factor, &(f_t.matrix() * x) + &(x * f_s.matrix()))
        }
    };
    Ok((factor, t_half.matrix() * &(&middle * s_half.matrix())))
}

pub fn corollary_functional(inp: &MeanInputs, func: MonotoneFunctionSpec, variant: CorollaryVariant, sel: NormSelector) -> Result<f64> {
    sel.validate(inp.dim())?;
    let (factor, m) = corollary_matrix(inp, func, variant)?;
    Ok(factor * norms_of(&m, &[sel])?[0])
}
