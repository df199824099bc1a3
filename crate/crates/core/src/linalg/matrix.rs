use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Dense square complex matrix stored row-major.
///
/// All entries are finite. Arithmetic through the `std::ops` impls panics on
/// a dimension mismatch; the `try_*` methods return an error instead.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixFile", into = "MatrixFile")]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<C64>,
}

/// On-disk layout: `{"dim": n, "entries": [[re, im], ...]}`, row-major.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixFile {
    pub dim: usize,
    pub entries: Vec<[f64; 2]>,
}

impl TryFrom<MatrixFile> for ComplexMatrix {
    type Error = Error;

    fn try_from(file: MatrixFile) -> Result<Self> {
        let entries = file.entries.iter().map(|&[re, im]| C64::new(re, im)).collect();
        ComplexMatrix::new(file.dim, entries)
    }
}

impl From<ComplexMatrix> for MatrixFile {
    fn from(m: ComplexMatrix) -> Self {
        MatrixFile {
            dim: m.dim,
            entries: m.entries.iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

impl ComplexMatrix {
    pub fn new(dim: usize, entries: Vec<C64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != dim * dim {
            return Err(Error::BadShape { expected: dim * dim, got: entries.len() });
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("matrix entries"));
        }
        Ok(ComplexMatrix { dim, entries })
    }

    /// Embeds a real row-major matrix with zero imaginary parts.
    pub fn from_real(dim: usize, entries: &[f64]) -> Result<Self> {
        Self::new(dim, entries.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        ComplexMatrix { dim, entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| C64::new(0.0, 0.0))
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_real_diag(&vec![1.0; dim])
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        Self::from_fn(diag.len(), |i, j| if i == j { C64::new(diag[i], 0.0) } else { C64::new(0.0, 0.0) })
    }

    pub fn scalar(value: f64) -> Self {
        Self::from_real_diag(&[value])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.entries[i * self.dim + j]
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, value: C64) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn diagonal(&self) -> Vec<C64> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, factor: f64) -> Self {
        ComplexMatrix { dim: self.dim, entries: self.entries.iter().map(|z| z * factor).collect() }
    }

    pub fn frobenius_norm(&self) -> f64 {
        // scaled sum of squares; avoids overflow for large entries
        let max = self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if max == 0.0 {
            return 0.0;
        }
        let sum: f64 = self.entries.iter().map(|z| (z / max).norm_sqr()).sum();
        max * sum.sqrt()
    }

    /// Frobenius norm of `A - A*`.
    pub fn hermitian_defect(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                sum += (self.get(i, j) - self.get(j, i).conj()).norm_sqr();
            }
        }
        sum.sqrt()
    }

    /// `(A + A*) / 2` with an exactly real diagonal.
    pub fn hermitian_part(&self) -> Self {
        Self::from_fn(self.dim, |i, j| {
            if i == j {
                C64::new(self.get(i, i).re, 0.0)
            } else {
                (self.get(i, j) + self.get(j, i).conj()) * 0.5
            }
        })
    }

    pub fn trace(&self) -> C64 {
        self.diagonal().into_iter().sum()
    }

    pub fn principal_submatrix(&self, keep: &[usize]) -> Result<Self> {
        if keep.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        if let Some(&bad) = keep.iter().find(|&&k| k >= self.dim) {
            return Err(Error::param(format!("index {bad} out of range for dim {}", self.dim)));
        }
        Ok(Self::from_fn(keep.len(), |i, j| self.get(keep[i], keep[j])))
    }

    /// Principal submatrix with row and column `index` deleted.
    pub fn without_index(&self, index: usize) -> Result<Self> {
        let keep: Vec<usize> = (0..self.dim).filter(|&k| k != index).collect();
        self.principal_submatrix(&keep)
    }

    /// Halves every off-diagonal entry: `(A + diag(A)) / 2`.
    pub fn decimate_off_diagonal(&self) -> Self {
        Self::from_fn(self.dim, |i, j| if i == j { self.get(i, i) } else { self.get(i, j) * 0.5 })
    }

    pub fn off_diagonal_norm(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                if i != j {
                    sum += self.get(i, j).norm_sqr();
                }
            }
        }
        sum.sqrt()
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let n = self.dim;
        let mut out = vec![C64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                let row = &other.entries[k * n..(k + 1) * n];
                let dst = &mut out[i * n..(i + 1) * n];
                for (d, b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        Ok(ComplexMatrix { dim: n, entries: out })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    /// Entrywise (Schur/Hadamard) product.
    pub fn try_schur(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        Ok(self.zip_with(other, |a, b| a * b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(C64, C64) -> C64) -> Self {
        ComplexMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    /// `A* A`, Hermitian by construction.
    pub fn gram(&self) -> Self {
        (&self.adjoint() * self).hermitian_part()
    }

    /// Conjugation `U A U*`.
    pub fn conjugate_by(&self, u: &Self) -> Result<Self> {
        u.try_mul(self)?.try_mul(&u.adjoint())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.entries.iter().zip(&other.entries).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self.get(i, j);
                write!(f, "{:>12.6}{:+.6}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_mul(rhs).expect("matrix product dimension mismatch")
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_add(rhs).expect("matrix sum dimension mismatch")
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.try_sub(rhs).expect("matrix difference dimension mismatch")
    }
}

impl Mul<f64> for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: f64) -> ComplexMatrix {
        self.scale(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_shapes_and_nan() {
        assert_eq!(ComplexMatrix::new(2, vec![C64::new(1.0, 0.0); 3]).unwrap_err(), Error::BadShape { expected: 4, got: 3 });
        assert_eq!(ComplexMatrix::new(0, vec![]).unwrap_err(), Error::EmptyMatrix);
        assert!(matches!(ComplexMatrix::from_real(1, &[f64::NAN]), Err(Error::NonFinite(_))));
    }

    #[test]
    fn product_and_adjoint() {
        let a = ComplexMatrix::new(2, vec![C64::new(1.0, 1.0), C64::new(2.0, 0.0), C64::new(0.0, -1.0), C64::new(3.0, 0.0)]).unwrap();
        let id = ComplexMatrix::identity(2);
        assert_eq!(&a * &id, a);
        let g = a.gram();
        assert_eq!(g.hermitian_defect(), 0.0);
        // (A*A)_{00} = |1+i|^2 + |-i|^2 = 3
        assert!((g.get(0, 0).re - 3.0).abs() < 1e-15);
    }

    #[test]
    fn principal_submatrix_and_decimation() {
        let a = ComplexMatrix::from_real(3, &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0]).unwrap();
        let sub = a.without_index(1).unwrap();
        assert_eq!(sub, ComplexMatrix::from_real(2, &[1.0, 3.0, 7.0, 9.0]).unwrap());
        let d = a.decimate_off_diagonal();
        assert_eq!(d.get(0, 1).re, 1.0);
        assert_eq!(d.get(2, 2).re, 9.0);
    }

    #[test]
    fn file_round_trip_is_bit_exact() {
        let a = ComplexMatrix::new(2, vec![C64::new(0.1, -1e-300), C64::new(1.0 / 3.0, 2.0), C64::new(-0.0, 5e10), C64::new(7.0, 0.0)]).unwrap();
        let text = serde_json::to_string(&a).unwrap();
        let back: ComplexMatrix = serde_json::from_str(&text).unwrap();
        for (x, y) in a.entries().iter().zip(back.entries()) {
            assert_eq!(x.re.to_bits(), y.re.to_bits());
            assert_eq!(x.im.to_bits(), y.im.to_bits());
        }
        assert!(serde_json::from_str::<ComplexMatrix>(r#"{"dim":2,"entries":[[1,0]]}"#).is_err());
    }
}
