use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("matrix entries must have length dim^2 = {expected}, got {got}")]
    BadShape { expected: usize, got: usize },

    #[error("matrix dimension must be positive")]
    EmptyMatrix,

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("matrix is not Hermitian (defect {defect:.3e}, allowed {allowed:.3e})")]
    NotHermitian { defect: f64, allowed: f64 },

    #[error("matrix is not positive semi-definite (min eigenvalue {min_eigenvalue:.6e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("matrix is singular (min eigenvalue {min_eigenvalue:.6e}) where a definite one is required")]
    Singular { min_eigenvalue: f64 },

    #[error("function undefined at eigenvalue {eigenvalue:.6e}")]
    Domain { eigenvalue: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal residual {residual:.3e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("unknown suite `{id}`; valid ids: {}", valid.join(", "))]
    UnknownSuite { id: String, valid: Vec<String> },

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("malformed input: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    /// Failures of the numerical kernel itself, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NoConvergence { .. })
    }
}
