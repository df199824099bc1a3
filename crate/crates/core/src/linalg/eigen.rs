use serde::{Deserialize, Serialize};

use super::matrix::{ComplexMatrix, C64};
use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 30;
pub const OFF_DIAGONAL_TOL: f64 = 1e-14;

/// Eigenvalues in non-increasing order; column `k` of `vectors` belongs to `values[k]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl EigenDecomposition {
    /// `V diag(f(λ)) V*`, Hermitian by construction.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let mapped: Vec<f64> = self.values.iter().map(|&l| f(l)).collect();
        self.reconstruct_values(&mapped)
    }

    pub(crate) fn reconstruct_values(&self, mapped: &[f64]) -> ComplexMatrix {
        let n = self.values.len();
        let v = &self.vectors;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let mut acc = C64::new(0.0, 0.0);
                for (k, &fk) in mapped.iter().enumerate() {
                    acc += v.get(i, k) * v.get(j, k).conj() * fk;
                }
                if i == j {
                    out.set(i, i, C64::new(acc.re, 0.0));
                } else {
                    out.set(i, j, acc);
                    out.set(j, i, acc.conj());
                }
            }
        }
        out
    }

    pub fn max(&self) -> f64 {
        self.values[0]
    }

    pub fn min(&self) -> f64 {
        *self.values.last().expect("non-empty spectrum")
    }

    /// `‖V*V − I‖_F`.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.values.len();
        let g = &self.vectors.adjoint() * &self.vectors;
        (&g - &ComplexMatrix::identity(n)).frobenius_norm()
    }

    /// Sorts values non-increasingly, permuting the eigenvector columns along.
    pub(crate) fn sorted(values: Vec<f64>, vectors: ComplexMatrix) -> Self {
        let n = values.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
        let vectors = ComplexMatrix::from_fn(n, |i, j| vectors.get(i, order[j]));
        let values = order.iter().map(|&k| values[k]).collect();
        EigenDecomposition { values, vectors }
    }
}

/// Cyclic complex Jacobi on a matrix assumed Hermitian (only the upper
/// triangle and real diagonal are trusted).
pub(crate) fn jacobi_eigen(a: &ComplexMatrix) -> Result<EigenDecomposition> {
    let n = a.dim();
    let mut w = a.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let scale = w.frobenius_norm();
    let target = OFF_DIAGONAL_TOL * scale;

    let mut off = w.off_diagonal_norm();
    let mut sweeps = 0;
    while off > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, residual: off });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut w, &mut v, p, q);
            }
        }
        sweeps += 1;
        off = w.off_diagonal_norm();
    }

    let values = (0..n).map(|i| w.get(i, i).re).collect();
    Ok(EigenDecomposition::sorted(values, v))
}

fn rotate(w: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let b = w.get(p, q);
    let abs_b = b.norm();
    if abs_b == 0.0 {
        return;
    }
    let n = w.dim();
    let a = w.get(p, p).re;
    let d = w.get(q, q).re;
    // phase e^{-iφ} turns the pivot real and positive
    let phase = b.conj() / abs_b;

    let theta = (d - a) / (2.0 * abs_b);
    let t = if theta.is_infinite() {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    if s == 0.0 {
        w.set(p, q, C64::new(0.0, 0.0));
        w.set(q, p, C64::new(0.0, 0.0));
        return;
    }

    // U = [[c, s], [-s·phase, c·phase]] applied as W ← U* W U, V ← V U
    for k in 0..n {
        let wkp = w.get(k, p);
        let wkq = w.get(k, q);
        w.set(k, p, wkp * c - wkq * phase * s);
        w.set(k, q, wkp * s + wkq * phase * c);
    }
    let pc = phase.conj();
    for k in 0..n {
        let wpk = w.get(p, k);
        let wqk = w.get(q, k);
        w.set(p, k, wpk * c - wqk * pc * s);
        w.set(q, k, wpk * s + wqk * pc * c);
    }
    w.set(p, p, C64::new(a - t * abs_b, 0.0));
    w.set(q, q, C64::new(d + t * abs_b, 0.0));
    w.set(p, q, C64::new(0.0, 0.0));
    w.set(q, p, C64::new(0.0, 0.0));

    for k in 0..n {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, vkp * c - vkq * phase * s);
        v.set(k, q, vkp * s + vkq * phase * c);
    }
}
