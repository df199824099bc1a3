use std::sync::OnceLock;

use super::eigen::{jacobi_eigen, EigenDecomposition};
use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

pub const HERMITIAN_TOL: f64 = 1e-12;
pub const PSD_TOL: f64 = 1e-10;

/// A validated Hermitian matrix. The stored base is the exact Hermitian part of
/// the input; `defect` remembers how far the input was from it.
#[derive(Clone, Debug)]
pub struct HermitianMatrix {
    base: ComplexMatrix,
    defect: f64,
    eig: OnceLock<EigenDecomposition>,
}

impl PartialEq for HermitianMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
    }
}

impl HermitianMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        let defect = m.hermitian_defect();
        let allowed = HERMITIAN_TOL * m.frobenius_norm().max(1.0);
        if defect > allowed {
            return Err(Error::NotHermitian { defect, allowed });
        }
        Ok(Self::from_parts(m.hermitian_part(), defect))
    }

    /// Symmetrizes without validation; for results that are Hermitian in exact arithmetic.
    pub fn from_hermitian_part(m: &ComplexMatrix) -> Self {
        Self::from_parts(m.hermitian_part(), 0.0)
    }

    fn from_parts(base: ComplexMatrix, defect: f64) -> Self {
        HermitianMatrix { base, defect, eig: OnceLock::new() }
    }

    pub(crate) fn with_eigen(base: ComplexMatrix, eig: EigenDecomposition) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(eig);
        HermitianMatrix { base, defect: 0.0, eig: cell }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_parts(ComplexMatrix::identity(dim), 0.0)
    }

    pub fn scalar_multiple(dim: usize, c: f64) -> Self {
        Self::from_parts(ComplexMatrix::identity(dim).scale(c), 0.0)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.base
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.base
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn hermiticity_defect(&self) -> f64 {
        self.defect
    }

    /// Cached eigendecomposition.
    pub fn eig(&self) -> Result<&EigenDecomposition> {
        if let Some(e) = self.eig.get() {
            return Ok(e);
        }
        let e = jacobi_eigen(&self.base)?;
        Ok(self.eig.get_or_init(|| e))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self::from_hermitian_part(&self.base.try_add(&other.base)?))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(Self::from_hermitian_part(&self.base.try_sub(&other.base)?))
    }

    pub fn scale(&self, c: f64) -> Self {
        Self::from_parts(self.base.scale(c), 0.0)
    }

    /// Spectral norm, i.e. the largest |eigenvalue|.
    pub fn spectral_norm(&self) -> Result<f64> {
        let e = self.eig()?;
        Ok(e.max().abs().max(e.min().abs()))
    }

    /// `f(A) = V diag(f(λ)) V*`; errors if `f` is non-finite at any eigenvalue.
    pub fn map_spectrum(&self, f: impl Fn(f64) -> f64) -> Result<HermitianMatrix> {
        let e = self.eig()?;
        let mapped = map_values(&e.values, f)?;
        Ok(Self::from_hermitian_part(&e.reconstruct_values(&mapped)))
    }
}

fn map_values(values: &[f64], f: impl Fn(f64) -> f64) -> Result<Vec<f64>> {
    values
        .iter()
        .map(|&l| {
            let y = f(l);
            if y.is_finite() {
                Ok(y)
            } else {
                Err(Error::Domain { eigenvalue: l })
            }
        })
        .collect()
}

/// Positive semi-definite (optionally definite) Hermitian matrix with its
/// eigendecomposition computed once at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct PositiveMatrix {
    base: HermitianMatrix,
    eig: EigenDecomposition,
    min_eigenvalue: f64,
    definite: bool,
}

impl PositiveMatrix {
    /// Semi-definite mode: accepts `λ_min ≥ −1e−10 · ‖A‖`.
    pub fn new(h: HermitianMatrix) -> Result<Self> {
        let eig = h.eig()?.clone();
        let min = eig.min();
        let norm = eig.max().abs().max(min.abs());
        if min < -PSD_TOL * norm {
            return Err(Error::NotPositive { min_eigenvalue: min });
        }
        Ok(PositiveMatrix { base: h, min_eigenvalue: min, definite: min > 0.0, eig })
    }

    pub fn new_definite(h: HermitianMatrix) -> Result<Self> {
        let p = Self::new(h)?;
        if !p.definite {
            return Err(Error::Singular { min_eigenvalue: p.min_eigenvalue });
        }
        Ok(p)
    }

    pub fn from_matrix(m: ComplexMatrix) -> Result<Self> {
        Self::new(HermitianMatrix::new(m)?)
    }

    pub fn definite_from_matrix(m: ComplexMatrix) -> Result<Self> {
        Self::new_definite(HermitianMatrix::new(m)?)
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar_multiple(dim, 1.0)
    }

    /// `c·I`, built without an eigensolve.
    pub fn scalar_multiple(dim: usize, c: f64) -> Self {
        assert!(c >= 0.0 && c.is_finite());
        let eig = EigenDecomposition { values: vec![c; dim], vectors: ComplexMatrix::identity(dim) };
        let base = HermitianMatrix::with_eigen(ComplexMatrix::identity(dim).scale(c), eig.clone());
        PositiveMatrix { base, eig, min_eigenvalue: c, definite: c > 0.0 }
    }

    /// `diag(d)` for non-negative `d`, built without an eigensolve.
    pub fn diagonal(d: &[f64]) -> Result<Self> {
        if d.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("diagonal"));
        }
        if let Some(&neg) = d.iter().find(|&&x| x < 0.0) {
            return Err(Error::NotPositive { min_eigenvalue: neg });
        }
        let eig = EigenDecomposition::sorted(d.to_vec(), ComplexMatrix::identity(d.len()));
        let min = eig.min();
        let base = HermitianMatrix::with_eigen(ComplexMatrix::from_real_diag(d), eig.clone());
        Ok(PositiveMatrix { base, eig, min_eigenvalue: min, definite: min > 0.0 })
    }

    /// Trusts `eig` as the spectral data of `V diag(values) V*` with non-negative values.
    pub(crate) fn from_eigen(eig: EigenDecomposition) -> Self {
        let matrix = eig.reconstruct_values(&eig.values);
        let min = eig.min();
        let base = HermitianMatrix::with_eigen(matrix, eig.clone());
        PositiveMatrix { base, eig, min_eigenvalue: min, definite: min > 0.0 }
    }

    pub fn hermitian(&self) -> &HermitianMatrix {
        &self.base
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        self.base.matrix()
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn eigen(&self) -> &EigenDecomposition {
        &self.eig
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.min_eigenvalue
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eig.max()
    }

    pub fn is_definite(&self) -> bool {
        self.definite
    }

    fn clamped_values(&self) -> Vec<f64> {
        self.eig.values.iter().map(|&l| l.max(0.0)).collect()
    }

    /// `f(A)`; tiny negative eigenvalues admitted by the PSD tolerance are clamped to 0.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> Result<HermitianMatrix> {
        let mapped = map_values(&self.clamped_values(), f)?;
        Ok(HermitianMatrix::from_hermitian_part(&self.eig.reconstruct_values(&mapped)))
    }

    /// `A^κ` via the cached eigenbasis.
    pub fn power(&self, kappa: f64) -> Result<PositiveMatrix> {
        if !kappa.is_finite() {
            return Err(Error::param(format!("exponent must be finite, got {kappa}")));
        }
        if kappa == 0.0 {
            return Ok(PositiveMatrix::identity(self.dim()));
        }
        if kappa == 1.0 {
            return Ok(self.clone());
        }
        if kappa < 0.0 && !self.definite {
            return Err(Error::Singular { min_eigenvalue: self.min_eigenvalue });
        }
        let values = map_values(&self.clamped_values(), |l| l.powf(kappa))?;
        let eig = EigenDecomposition::sorted(values, self.eig.vectors.clone());
        Ok(PositiveMatrix::from_eigen(eig))
    }

    pub fn sqrt(&self) -> PositiveMatrix {
        self.power(0.5).expect("square root of a PSD matrix is always defined")
    }

    pub fn inverse_sqrt(&self) -> Result<PositiveMatrix> {
        self.power(-0.5)
    }

    /// Product of the (clamped) eigenvalues.
    pub fn det(&self) -> f64 {
        self.clamped_values().iter().product()
    }

    /// Real trace (sum of the diagonal).
    pub fn trace(&self) -> f64 {
        self.matrix().trace().re
    }
}

impl TryFrom<ComplexMatrix> for PositiveMatrix {
    type Error = Error;

    fn try_from(m: ComplexMatrix) -> Result<Self> {
        PositiveMatrix::from_matrix(m)
    }
}
