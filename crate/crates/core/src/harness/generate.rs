use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, HermitianMatrix, PositiveMatrix, C64};
use crate::suites::SpectralCondition;

pub fn log_uniform<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    if lo == hi {
        return lo;
    }
    let u: f64 = rng.random();
    (lo.ln() + u * (hi.ln() - lo.ln())).exp().clamp(lo, hi)
}

/// Independent standard complex Gaussian entries.
pub fn gen_gaussian<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        C64::new(re, im)
    })
}

/// Eigenvectors of a random Hermitian matrix.
pub fn gen_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<ComplexMatrix> {
    let h = HermitianMatrix::from_hermitian_part(&gen_gaussian(dim, rng));
    Ok(h.eig()?.vectors.clone())
}

/// Positive definite matrix with log-uniform spectrum in `[lo, hi]` and a random eigenbasis.
pub fn gen_positive<R: Rng + ?Sized>(dim: usize, lo: f64, hi: f64, rng: &mut R) -> Result<PositiveMatrix> {
    if dim == 0 {
        return Err(Error::EmptyMatrix);
    }
    if !(lo > 0.0 && lo <= hi && hi.is_finite()) {
        return Err(Error::param(format!("invalid spectral interval [{lo}, {hi}]")));
    }
    if lo == hi {
        return Ok(PositiveMatrix::scalar_multiple(dim, lo));
    }
    let values: Vec<f64> = (0..dim).map(|_| log_uniform(rng, lo, hi)).collect();
    let u = gen_unitary(dim, rng)?;
    let d = ComplexMatrix::from_real_diag(&values);
    let a = &u * &(&d * &u.adjoint());
    PositiveMatrix::definite_from_matrix(a.hermitian_part())
}

/// `(T, S)` with spectra inside the intervals of `cond`, checked in the Löwner order.
pub fn gen_conditioned_pair<R: Rng + ?Sized>(dim: usize, cond: &SpectralCondition, rng: &mut R) -> Result<(PositiveMatrix, PositiveMatrix)> {
    cond.validate()?;
    let ((tl, th), (sl, sh)) = cond.intervals();
    let t = gen_positive(dim, tl, th, rng)?;
    let s = gen_positive(dim, sl, sh, rng)?;
    cond.check_operands(&t, &s)?;
    Ok((t, s))
}
