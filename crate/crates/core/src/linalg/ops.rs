use super::eigen::EigenDecomposition;
use super::hermitian::{HermitianMatrix, PositiveMatrix};
use super::matrix::{ComplexMatrix, C64};
use crate::error::Result;

pub fn eig_hermitian(a: &HermitianMatrix) -> Result<EigenDecomposition> {
    a.eig().cloned()
}

pub fn apply_spectral_function(a: &PositiveMatrix, f: impl Fn(f64) -> f64) -> Result<HermitianMatrix> {
    a.apply(f)
}

pub fn fractional_power(a: &PositiveMatrix, kappa: f64) -> Result<PositiveMatrix> {
    a.power(kappa)
}

pub fn schur_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.try_schur(b)
}

pub fn trace_of(a: &ComplexMatrix) -> C64 {
    a.trace()
}

pub fn det_of(a: &PositiveMatrix) -> f64 {
    a.det()
}

/// Minimum eigenvalue of `B − A`; non-negative certifies `A ⪯ B`.
pub fn loewner_gap(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<f64> {
    Ok(b.sub(a)?.eig()?.min())
}

/// `|A| = (A*A)^{1/2}`.
pub fn abs_of(a: &ComplexMatrix) -> Result<PositiveMatrix> {
    let g = PositiveMatrix::new(HermitianMatrix::from_hermitian_part(&a.gram()))?;
    Ok(g.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn schur_examples() {
        let a = ComplexMatrix::from_real(2, &[1.0, 2.0, 3.0, 4.0]).unwrap();
        let ones = ComplexMatrix::from_real(2, &[1.0; 4]).unwrap();
        assert_eq!(schur_product(&a, &ones).unwrap(), a);
        let d = schur_product(&ComplexMatrix::from_real_diag(&[2.0, 3.0]), &ComplexMatrix::from_real_diag(&[5.0, 7.0])).unwrap();
        assert_eq!(d, ComplexMatrix::from_real_diag(&[10.0, 21.0]));
        assert!(matches!(schur_product(&a, &ComplexMatrix::identity(3)), Err(Error::DimMismatch { .. })));
    }

    #[test]
    fn trace_det_gap_examples() {
        assert_eq!(trace_of(&ComplexMatrix::identity(4)).re, 4.0);
        assert_eq!(det_of(&PositiveMatrix::diagonal(&[2.0, 3.0]).unwrap()), 6.0);
        let i = HermitianMatrix::identity(3);
        assert_eq!(loewner_gap(&i, &i).unwrap(), 0.0);
        assert!((loewner_gap(&i, &i.scale(2.0)).unwrap() - 1.0).abs() < 1e-15);
    }
}
