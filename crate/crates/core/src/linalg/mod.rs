//! Dense complex matrix kernel.

mod eigen;
mod hermitian;
mod matrix;
mod norms;
mod ops;

pub use eigen::{EigenDecomposition, MAX_SWEEPS, OFF_DIAGONAL_TOL};
pub use hermitian::{HermitianMatrix, PositiveMatrix, HERMITIAN_TOL, PSD_TOL};
pub use matrix::{ComplexMatrix, MatrixFile, C64};
pub use norms::{singular_values, ui_norm, NormSelector};
pub use ops::{abs_of, apply_spectral_function, det_of, eig_hermitian, fractional_power, loewner_gap, schur_product, trace_of};
