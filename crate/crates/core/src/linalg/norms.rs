use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::{ComplexMatrix, C64};
use crate::error::{Error, Result};

const SVD_MAX_SWEEPS: usize = 60;

/// Singular values via one-sided (Hestenes) Jacobi on the columns of `a`.
/// Non-increasing and non-negative.
pub fn singular_values(a: &ComplexMatrix) -> Vec<f64> {
    let n = a.dim();
    // column-major working copy
    let mut cols: Vec<Vec<C64>> = (0..n).map(|j| (0..n).map(|i| a.get(i, j)).collect()).collect();

    for _ in 0..SVD_MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let alpha: f64 = cols[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = cols[q].iter().map(|z| z.norm_sqr()).sum();
                let gamma: C64 = cols[p].iter().zip(&cols[q]).map(|(x, y)| x.conj() * y).sum();
                let abs_g = gamma.norm();
                if abs_g == 0.0 || abs_g <= 1e-15 * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase = gamma.conj() / abs_g;
                let theta = (beta - alpha) / (2.0 * abs_g);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let (left, right) = cols.split_at_mut(q);
                for (x, y) in left[p].iter_mut().zip(right[0].iter_mut()) {
                    let (xp, yq) = (*x, *y);
                    *x = xp * c - yq * phase * s;
                    *y = xp * s + yq * phase * c;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut values: Vec<f64> = cols.iter().map(|col| norm2(col)).collect();
    values.sort_by(|a, b| b.total_cmp(a));
    values
}

fn norm2(v: &[C64]) -> f64 {
    let max = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if max == 0.0 {
        return 0.0;
    }
    max * v.iter().map(|z| (z / max).norm_sqr()).sum::<f64>().sqrt()
}

/// A unitarily invariant norm. `Trace`, `Frobenius` and `Spectral` are aliases
/// that resolve to `Schatten(1)`, `Schatten(2)` and `KyFan(1)` before evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NormSelector {
    Schatten(f64),
    KyFan(usize),
    Trace,
    Frobenius,
    Spectral,
}

impl NormSelector {
    pub fn canonical(self) -> NormSelector {
        match self {
            NormSelector::Trace => NormSelector::Schatten(1.0),
            NormSelector::Frobenius => NormSelector::Schatten(2.0),
            NormSelector::Spectral => NormSelector::KyFan(1),
            other => other,
        }
    }

    pub fn validate(self, dim: usize) -> Result<()> {
        match self.canonical() {
            NormSelector::Schatten(p) if p.is_nan() || p < 1.0 => {
                Err(Error::param(format!("schatten exponent must be >= 1, got {p}")))
            }
            NormSelector::KyFan(k) if k == 0 || k > dim => {
                Err(Error::param(format!("ky fan index {k} outside 1..={dim}")))
            }
            _ => Ok(()),
        }
    }

    /// Evaluates the norm from singular values sorted non-increasingly.
    pub fn from_singular_values(self, s: &[f64]) -> Result<f64> {
        self.validate(s.len())?;
        Ok(match self.canonical() {
            NormSelector::KyFan(k) => s[..k].iter().sum(),
            NormSelector::Schatten(p) => {
                let top = s[0];
                if p.is_infinite() || top == 0.0 {
                    top
                } else if p == 1.0 {
                    s.iter().sum()
                } else {
                    top * s.iter().map(|&x| (x / top).powf(p)).sum::<f64>().powf(1.0 / p)
                }
            }
            _ => unreachable!("canonical selectors are schatten or ky fan"),
        })
    }

    /// The default family: Ky Fan 1..=dim and Schatten 1, 2, 3, ∞.
    pub fn standard_family(dim: usize) -> Vec<NormSelector> {
        let mut out: Vec<NormSelector> = (1..=dim).map(NormSelector::KyFan).collect();
        out.extend([1.0, 2.0, 3.0, f64::INFINITY].map(NormSelector::Schatten));
        out
    }
}

pub fn ui_norm(a: &ComplexMatrix, sel: NormSelector) -> Result<f64> {
    sel.validate(a.dim())?;
    sel.from_singular_values(&singular_values(a))
}

impl fmt::Display for NormSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormSelector::Schatten(p) if p.is_infinite() => write!(f, "schatten:inf"),
            NormSelector::Schatten(p) => write!(f, "schatten:{p}"),
            NormSelector::KyFan(k) => write!(f, "kyfan:{k}"),
            NormSelector::Trace => write!(f, "trace"),
            NormSelector::Frobenius => write!(f, "frobenius"),
            NormSelector::Spectral => write!(f, "spectral"),
        }
    }
}

impl FromStr for NormSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let sel = match s.split_once(':') {
            None => match s.as_str() {
                "trace" | "nuclear" => NormSelector::Trace,
                "frobenius" | "hs" => NormSelector::Frobenius,
                "spectral" | "operator" => NormSelector::Spectral,
                _ => return Err(Error::Format(format!("unknown norm `{s}`"))),
            },
            Some(("schatten", p)) => {
                let p = match p {
                    "inf" | "infinity" => f64::INFINITY,
                    _ => p.parse::<f64>().map_err(|_| Error::Format(format!("bad schatten exponent `{p}`")))?,
                };
                if p.is_nan() || p < 1.0 {
                    return Err(Error::param(format!("schatten exponent must be >= 1, got {p}")));
                }
                NormSelector::Schatten(p)
            }
            Some(("kyfan", k)) => {
                let k = k.parse::<usize>().map_err(|_| Error::Format(format!("bad ky fan index `{k}`")))?;
                if k == 0 {
                    return Err(Error::param("ky fan index must be >= 1"));
                }
                NormSelector::KyFan(k)
            }
            _ => return Err(Error::Format(format!("unknown norm `{s}`"))),
        };
        Ok(sel)
    }
}

impl Serialize for NormSelector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for NormSelector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
