//! Operator means and the norm interpolants built from them.
//!
//! Operator convention: `T∇_κS = (1−κ)T + κS` and
//! `T♯_κS = T^{1/2}(T^{−1/2}ST^{−1/2})^κ T^{1/2}`.

mod functions;

pub use functions::{corollary_functional, CorollaryVariant, MonotoneFunctionSpec};
pub(crate) use functions::corollary_matrix;

use crate::error::{Error, Result};
use crate::linalg::{singular_values, ComplexMatrix, HermitianMatrix, NormSelector, PositiveMatrix};
use crate::scalar::heinz;

fn require_same_dim(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimMismatch { left: a, right: b });
    }
    Ok(())
}

pub fn op_arith_mean(t: &PositiveMatrix, s: &PositiveMatrix, kappa: f64) -> Result<PositiveMatrix> {
    require_same_dim(t.dim(), s.dim())?;
    let m = t.matrix().scale(1.0 - kappa).try_add(&s.matrix().scale(kappa))?;
    PositiveMatrix::new(HermitianMatrix::from_hermitian_part(&m))
}

/// `T^{1/2}` and `X = T^{−1/2}ST^{−1/2}`: every `♯_κ` and Heinz mean of the pair
/// is `T^{1/2} f(X) T^{1/2}` for a scalar `f`.
#[derive(Clone, Debug)]
pub struct GeometricPencil {
    t_half: PositiveMatrix,
    x: PositiveMatrix,
}

impl GeometricPencil {
    pub fn new(t: &PositiveMatrix, s: &PositiveMatrix) -> Result<Self> {
        require_same_dim(t.dim(), s.dim())?;
        if !t.is_definite() {
            return Err(Error::Singular { min_eigenvalue: t.min_eigenvalue() });
        }
        let t_inv_half = t.inverse_sqrt()?;
        let inner = t_inv_half.matrix() * &(s.matrix() * t_inv_half.matrix());
        let x = PositiveMatrix::new(HermitianMatrix::from_hermitian_part(&inner))?;
        Ok(GeometricPencil { t_half: t.sqrt(), x })
    }

    /// The middle operator `T^{−1/2}ST^{−1/2}`.
    pub fn inner(&self) -> &PositiveMatrix {
        &self.x
    }

    /// `T^{1/2} f(X) T^{1/2}`.
    pub fn congruence(&self, f: impl Fn(f64) -> f64) -> Result<HermitianMatrix> {
        let fx = self.x.apply(f)?;
        let th = self.t_half.matrix();
        Ok(HermitianMatrix::from_hermitian_part(&(th * &(fx.matrix() * th))))
    }

    pub fn sharp(&self, kappa: f64) -> Result<HermitianMatrix> {
        if kappa == 0.0 {
            return Ok(HermitianMatrix::from_hermitian_part(&(self.t_half.matrix() * self.t_half.matrix())));
        }
        self.congruence(|x| x.powf(kappa))
    }

    /// `H_κ(T,S)`; depends on κ only through `|κ − 1/2|`.
    pub fn heinz(&self, kappa: f64) -> Result<HermitianMatrix> {
        self.congruence(|x| heinz(x, 1.0, kappa))
    }
}

pub fn op_geom_mean(t: &PositiveMatrix, s: &PositiveMatrix, kappa: f64) -> Result<PositiveMatrix> {
    PositiveMatrix::new(GeometricPencil::new(t, s)?.sharp(kappa)?)
}

pub fn op_heinz_mean(t: &PositiveMatrix, s: &PositiveMatrix, kappa: f64) -> Result<PositiveMatrix> {
    PositiveMatrix::new(GeometricPencil::new(t, s)?.heinz(kappa)?)
}

/// Operands of the interpolants: definite `T`, `S`, arbitrary `X`.
#[derive(Clone, Debug)]
pub struct MeanInputs {
    pub t: PositiveMatrix,
    pub s: PositiveMatrix,
    pub x: ComplexMatrix,
    pub kappa: f64,
    pub theta: f64,
    pub mu: f64,
}

impl MeanInputs {
    pub fn new(t: PositiveMatrix, s: PositiveMatrix, x: ComplexMatrix, kappa: f64, theta: f64, mu: f64) -> Result<Self> {
        require_same_dim(t.dim(), s.dim())?;
        require_same_dim(t.dim(), x.dim())?;
        for (name, m) in [("T", &t), ("S", &s)] {
            if !m.is_definite() {
                return Err(Error::param(format!("{name} must be positive definite")));
            }
        }
        if !(0.0..=1.0).contains(&kappa) {
            return Err(Error::param(format!("kappa must lie in [0, 1], got {kappa}")));
        }
        if !(theta >= 0.0 && theta.is_finite()) {
            return Err(Error::param(format!("theta must be >= 0, got {theta}")));
        }
        if !(0.0..=1.0).contains(&mu) {
            return Err(Error::param(format!("mu must lie in [0, 1], got {mu}")));
        }
        Ok(MeanInputs { t, s, x, kappa, theta, mu })
    }

    pub fn dim(&self) -> usize {
        self.t.dim()
    }

    /// `η = min{sp(T), sp(S)}`.
    pub fn eta(&self) -> f64 {
        self.t.min_eigenvalue().min(self.s.min_eigenvalue())
    }
}

/// The three matrices the interpolants combine:
/// `A = T^κXS^{1−κ}`, `C = T^{1−κ}XS^κ`, `B = (TX + XS)/2`.
#[derive(Clone, Debug)]
pub struct InterpolantParts {
    pub a: ComplexMatrix,
    pub c: ComplexMatrix,
    pub b: ComplexMatrix,
}

impl InterpolantParts {
    pub fn new(inp: &MeanInputs) -> Result<Self> {
        let k = inp.kappa;
        let x = &inp.x;
        let a = inp.t.power(k)?.matrix() * &(x * inp.s.power(1.0 - k)?.matrix());
        let c = inp.t.power(1.0 - k)?.matrix() * &(x * inp.s.power(k)?.matrix());
        let b = (inp.t.matrix() * x).try_add(&(x * inp.s.matrix()))?.scale(0.5);
        Ok(InterpolantParts { a, c, b })
    }

    /// `(1−ϑ)A + ϑB`.
    pub fn psi_matrix(&self, theta: f64) -> ComplexMatrix {
        &self.a.scale(1.0 - theta) + &self.b.scale(theta)
    }

    /// `(1−ϑ/2)(A + C) + ϑB`.
    pub fn phi_matrix(&self, theta: f64) -> ComplexMatrix {
        &(&self.a + &self.c).scale(1.0 - theta / 2.0) + &self.b.scale(theta)
    }

    pub fn psi(&self, theta: f64, sels: &[NormSelector]) -> Result<Vec<f64>> {
        norms_of(&self.psi_matrix(theta), sels)
    }

    pub fn phi(&self, theta: f64, sels: &[NormSelector]) -> Result<Vec<f64>> {
        norms_of(&self.phi_matrix(theta), sels)
    }
}

/// Every selector evaluated from one singular value computation.
pub fn norms_of(m: &ComplexMatrix, sels: &[NormSelector]) -> Result<Vec<f64>> {
    let s = singular_values(m);
    sels.iter().map(|sel| sel.from_singular_values(&s)).collect()
}

/// `ψ(ϑ,κ) = |||(1−ϑ)T^κXS^{1−κ} + ϑ(TX+XS)/2|||` at `inp.theta`.
pub fn psi_interpolant(inp: &MeanInputs, sel: NormSelector) -> Result<f64> {
    sel.validate(inp.dim())?;
    Ok(InterpolantParts::new(inp)?.psi(inp.theta, &[sel])?[0])
}

/// `φ(ϑ,κ) = |||(1−ϑ/2)(T^κXS^{1−κ} + T^{1−κ}XS^κ) + ϑ(TX+XS)/2|||` at `inp.theta`.
pub fn phi_interpolant(inp: &MeanInputs, sel: NormSelector) -> Result<f64> {
    sel.validate(inp.dim())?;
    Ok(InterpolantParts::new(inp)?.phi(inp.theta, &[sel])?[0])
}
