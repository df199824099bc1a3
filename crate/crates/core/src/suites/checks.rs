use serde::{Deserialize, Serialize};

use super::SpectralCondition;
use crate::error::{Error, Result};
use crate::linalg::{singular_values, ComplexMatrix, HermitianMatrix, NormSelector, PositiveMatrix};
use crate::means::{norms_of, CorollaryVariant, GeometricPencil, InterpolantParts, MeanInputs, MonotoneFunctionSpec};
use crate::scalar::{heinz, heinz_refined_sides, kant, CheckPart, CheckResult, Form, HeinzKind, WeightParams, WeightVector};

fn same_dim(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimMismatch { left: a, right: b });
    }
    Ok(())
}

fn validate_norms(sels: &[NormSelector], dim: usize) -> Result<()> {
    if sels.is_empty() {
        return Err(Error::param("at least one norm is required"));
    }
    sels.iter().try_for_each(|s| s.validate(dim))
}

/// `|||T∘S||| ≤ max_i t_ii · |||S|||` for every selector.
pub fn check_schur_norm_bound(t: &PositiveMatrix, s: &ComplexMatrix, sels: &[NormSelector]) -> Result<CheckResult> {
    same_dim(t.dim(), s.dim())?;
    validate_norms(sels, s.dim())?;
    let lhs = norms_of(&t.matrix().try_schur(s)?, sels)?;
    let dmax = t.matrix().diagonal().iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
    let rhs = norms_of(s, sels)?;
    let parts = sels.iter().zip(lhs.iter().zip(&rhs)).map(|(sel, (l, r))| CheckPart::le(sel.to_string(), *l, dmax * r)).collect();
    Ok(CheckResult::of(parts))
}

/// The kernel `(κ_i^r + κ_j^r)/(κ_i² + tκ_iκ_j + κ_j²)` scaled to unit diagonal.
pub fn hhm2_kernel(kappas: &[f64], r: f64, t: f64) -> Result<ComplexMatrix> {
    if kappas.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    if kappas.iter().any(|k| !(k.is_finite() && *k > 0.0)) {
        return Err(Error::param("kernel nodes must be positive and finite"));
    }
    if !(-1.0..=1.0).contains(&r) {
        return Err(Error::param(format!("kernel exponent must lie in [-1, 1], got {r}")));
    }
    if !(t > -2.0 && t <= 2.0) {
        return Err(Error::param(format!("kernel parameter t must lie in (-2, 2], got {t}")));
    }
    let n = kappas.len();
    let g = |i: usize, j: usize| {
        let (a, b) = (kappas[i], kappas[j]);
        (a.powf(r) + b.powf(r)) / (a * a + t * a * b + b * b)
    };
    let d: Vec<f64> = (0..n).map(|i| g(i, i).sqrt()).collect();
    let entries: Vec<f64> = (0..n * n).map(|k| {
        let (i, j) = (k / n, k % n);
        if i == j {
            1.0
        } else {
            g(i, j) / (d[i] * d[j])
        }
    }).collect();
    ComplexMatrix::from_real(n, &entries)
}

/// Positive semi-definiteness of the kernel matrix: slack is its smallest eigenvalue.
pub fn check_hhm2_psd(kappas: &[f64], r: f64, t: f64) -> Result<CheckResult> {
    let k = HermitianMatrix::new(hhm2_kernel(kappas, r, t)?)?;
    Ok(CheckResult::single(CheckPart::le("psd", 0.0, k.eig()?.min())))
}

fn fmt_grid(x: f64) -> String {
    format!("{x}")
}

/// Pairwise comparisons of an interpolant along the two ϑ grids.
pub(crate) fn monotone_parts(
    name: &str,
    eval: impl Fn(f64) -> Result<Vec<f64>>,
    sels: &[NormSelector],
    low: &[f64],
    high: &[f64],
) -> Result<Vec<CheckPart>> {
    let mut parts = Vec::new();
    let half = eval(0.5)?;
    for &th in low.iter().filter(|&&th| th != 0.5) {
        let v = eval(th)?;
        for (j, sel) in sels.iter().enumerate() {
            parts.push(CheckPart::le(format!("{name}_low:{}:{sel}", fmt_grid(th)), v[j], half[j]));
        }
    }
    let vals: Vec<Vec<f64>> = high.iter().map(|&th| eval(th)).collect::<Result<_>>()?;
    for w in 0..high.len().saturating_sub(1) {
        for (j, sel) in sels.iter().enumerate() {
            let label = format!("{name}_high:{}-{}:{sel}", fmt_grid(high[w]), fmt_grid(high[w + 1]));
            parts.push(CheckPart::le(label, vals[w][j], vals[w + 1][j]));
        }
    }
    if parts.is_empty() {
        return Err(Error::param("theta grids produce no comparisons"));
    }
    Ok(parts)
}

fn check_grid(low: &[f64], high: &[f64]) -> Result<()> {
    if low.iter().any(|&t| !(0.0..=0.5).contains(&t)) {
        return Err(Error::param("low theta grid must lie in [0, 1/2]"));
    }
    if high.iter().any(|&t| !(t >= 0.5 && t.is_finite())) || high.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::param("high theta grid must be increasing in [1/2, inf)"));
    }
    Ok(())
}

/// `ψ(ϑ) ≤ ψ(1/2)` on the low grid and `ψ` non-decreasing along the high grid.
pub fn check_psi_monotone(inp: &MeanInputs, sels: &[NormSelector], low: &[f64], high: &[f64]) -> Result<CheckResult> {
    validate_norms(sels, inp.dim())?;
    check_grid(low, high)?;
    let ip = InterpolantParts::new(inp)?;
    Ok(CheckResult::of(monotone_parts("psi", |th| ip.psi(th, sels), sels, low, high)?))
}

/// The same comparisons for `φ`.
pub fn check_phi_monotone(inp: &MeanInputs, sels: &[NormSelector], low: &[f64], high: &[f64]) -> Result<CheckResult> {
    validate_norms(sels, inp.dim())?;
    check_grid(low, high)?;
    let ip = InterpolantParts::new(inp)?;
    Ok(CheckResult::of(monotone_parts("phi", |th| ip.phi(th, sels), sels, low, high)?))
}

/// `|||A||| ≤ ½|||A + C||| ≤ |||TX + XS + tA||| / (t+2)` for each `t`.
pub fn check_chain_refund2(inp: &MeanInputs, sels: &[NormSelector], ts: &[f64]) -> Result<CheckResult> {
    validate_norms(sels, inp.dim())?;
    if ts.is_empty() {
        return Err(Error::param("chain needs at least one t"));
    }
    if let Some(bad) = ts.iter().find(|&&t| !(t > -2.0 && t <= 2.0)) {
        return Err(Error::param(format!("chain parameter t must lie in (-2, 2], got {bad}")));
    }
    let ip = InterpolantParts::new(inp)?;
    let left = norms_of(&ip.a, sels)?;
    let mid: Vec<f64> = norms_of(&(&ip.a + &ip.c), sels)?.into_iter().map(|v| v * 0.5).collect();
    let two_b = ip.b.scale(2.0);
    let parts = chain_parts(sels, ts, &left, &mid, |t| norms_of(&(&two_b + &ip.a.scale(t)), sels))?;
    Ok(CheckResult::of(parts))
}

/// Parts of the chain given the left and middle values and the unscaled right norms per `t`.
pub(crate) fn chain_parts(
    sels: &[NormSelector],
    ts: &[f64],
    left: &[f64],
    mid: &[f64],
    right: impl Fn(f64) -> Result<Vec<f64>>,
) -> Result<Vec<CheckPart>> {
    let mut parts: Vec<CheckPart> =
        sels.iter().enumerate().map(|(j, sel)| CheckPart::le(format!("left:{sel}"), left[j], mid[j])).collect();
    for &t in ts {
        let r = right(t)?;
        for (j, sel) in sels.iter().enumerate() {
            parts.push(CheckPart::le(format!("right:t={}:{sel}", fmt_grid(t)), mid[j], r[j] / (t + 2.0)));
        }
    }
    Ok(parts)
}

/// The corollary functional bounded by `ψ(ϑ)` at every `ϑ` of the grid.
pub fn check_corollary_functional_bound(
    inp: &MeanInputs,
    func: MonotoneFunctionSpec,
    variant: CorollaryVariant,
    sels: &[NormSelector],
    thetas: &[f64],
) -> Result<CheckResult> {
    validate_norms(sels, inp.dim())?;
    if !(0.25..=0.75).contains(&inp.mu) {
        return Err(Error::param(format!("mu must lie in [1/4, 3/4], got {}", inp.mu)));
    }
    check_grid(&[], thetas)?;
    if thetas.is_empty() {
        return Err(Error::param("theta grid is empty"));
    }
    let (factor, m) = crate::means::corollary_matrix(inp, func, variant)?;
    let lhs: Vec<f64> = norms_of(&m, sels)?.into_iter().map(|v| v * factor).collect();
    let ip = InterpolantParts::new(inp)?;
    let mut parts = Vec::new();
    for &th in thetas {
        let psi = ip.psi(th, sels)?;
        for (j, sel) in sels.iter().enumerate() {
            parts.push(CheckPart::le(format!("{}:{}:{sel}", func.name, fmt_grid(th)), lhs[j], psi[j]));
        }
    }
    Ok(CheckResult::of(parts))
}

/// The `h` of the Kantorovich factor for the operator form: printed `M/m`, or
/// `x^κ` with `x` the point of the inner spectral window closest to 1.
pub fn operator_h(cond: &SpectralCondition, kappa: f64, form: Form) -> f64 {
    match form {
        Form::PaperStated => cond.h(),
        Form::DerivedCorrected => {
            let (lo, hi) = cond.inner_window();
            1f64.clamp(lo, hi).powf(kappa)
        }
    }
}

/// Scalar profile of the operator inequality: sides as functions of an
/// eigenvalue `x` of `T^{−1/2}ST^{−1/2}` (with `T` replaced by 1).
pub(crate) fn operator_heinz_profile(x: f64, ks: f64, params: &WeightParams, which: HeinzKind, form: Form) -> Result<(f64, f64)> {
    let k = params.kappa;
    heinz_refined_sides(heinz(x, 1.0, 0.0), heinz(x, 1.0, k), heinz(x, 1.0, k / 2.0), heinz(x, 1.0, params.nu), ks, params, which, form)
}

/// Operator Heinz refinement (`A1`) or reverse (`A2`) in the Löwner order.
///
/// Every mean involved is `T^{1/2} g(X) T^{1/2}` for a scalar `g`, so each side
/// is one congruence of the corresponding scalar profile.
pub fn check_operator_heinz(
    t: &PositiveMatrix,
    s: &PositiveMatrix,
    cond: &SpectralCondition,
    params: &WeightParams,
    which: HeinzKind,
    form: Form,
) -> Result<CheckResult> {
    same_dim(t.dim(), s.dim())?;
    cond.validate()?;
    cond.check_operands(t, s)?;
    params.require_nu_below_kappa()?;
    let ks = kant(operator_h(cond, params.kappa, form).sqrt());
    let pencil = GeometricPencil::new(t, s)?;
    let side = |pick: fn((f64, f64)) -> f64| {
        pencil.congruence(|x| operator_heinz_profile(x, ks, params, which, form).map(pick).unwrap_or(f64::NAN))
    };
    let lhs = side(|p| p.0)?;
    let rhs = side(|p| p.1)?;
    let label = match which {
        HeinzKind::A1 => "o1",
        HeinzKind::A2 => "a2op",
    };
    Ok(CheckResult::single(CheckPart::loewner(label, &lhs, &rhs)?))
}

/// `s_j(TS) ≤ s_j(T^p/p + S^q/q)` for every `j`.
pub fn check_ando(t: &PositiveMatrix, s: &PositiveMatrix, p: f64, q: f64) -> Result<CheckResult> {
    same_dim(t.dim(), s.dim())?;
    let params = WeightParams { p, q, ..Default::default() };
    params.require_conjugate()?;
    let lhs = singular_values(&(t.matrix() * s.matrix()));
    let young = t.power(p)?.matrix().scale(1.0 / p).try_add(&s.power(q)?.matrix().scale(1.0 / q))?;
    let rhs = singular_values(&young);
    Ok(CheckResult::of(lhs.iter().zip(&rhs).enumerate().map(|(j, (l, r))| CheckPart::le(format!("s{}", j + 1), *l, *r)).collect()))
}

fn trace_norm(m: &ComplexMatrix) -> f64 {
    singular_values(m).iter().sum()
}

fn young_sum(t: &PositiveMatrix, s: &PositiveMatrix, params: &WeightParams) -> Result<ComplexMatrix> {
    let r = params.r_exp;
    t.power(r)?.matrix().scale(1.0 / params.p).try_add(&s.power(r)?.matrix().scale(1.0 / params.q))
}

/// Trace form (`man2`) and trace-norm form (`rashid1`) of the refined matrix Young inequality.
pub fn check_trace_young(t: &PositiveMatrix, s: &PositiveMatrix, params: &WeightParams) -> Result<CheckResult> {
    same_dim(t.dim(), s.dim())?;
    params.require_conjugate()?;
    params.require_m_r()?;
    let (m, r) = (params.m as f64, params.r_exp);
    let mi = params.m as i32;
    let r0 = params.r0();
    let prod = t.power(1.0 / params.p)?.matrix() * s.power(1.0 / params.q)?.matrix();
    let tn = trace_norm(&prod);

    let gap = t.trace().powf(m / 2.0) - s.trace().powf(m / 2.0);
    let tr_rhs = (t.power(r)?.trace() / params.p + s.power(r)?.trace() / params.q).powf(m / r);
    let man2 = CheckPart::le("man2", tn.powi(mi) + r0.powi(mi) * gap * gap, tr_rhs);

    let gap = trace_norm(t.matrix()).powf(m / 2.0) - trace_norm(s.matrix()).powf(m / 2.0);
    let n_rhs = trace_norm(&young_sum(t, s, params)?).powf(m / r);
    let rashid1 = CheckPart::le("rashid1", tn.powi(mi) + r0.powi(mi) * gap * gap, n_rhs);
    Ok(CheckResult::of(vec![man2, rashid1]))
}

/// Which second determinant term the determinant Young inequality carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DetForm {
    /// `det(T^m + S^m − 2S^{m/2}(S^{−1/2}TS^{−1/2})^m S^{m/2})²`
    Printed,
    /// `det(S)^m · det((S^{−1/2}TS^{−1/2})^{m/2} − I)²`
    Proof,
}

fn hermitian_det(h: &HermitianMatrix) -> Result<f64> {
    Ok(h.eig()?.values.iter().product())
}

/// `det(T^{1/p}S^{1/q})^m + r₀^{mn}·D ≤ det(T^r/p + S^r/q)^{m/r}`.
pub fn check_det_young(t: &PositiveMatrix, s: &PositiveMatrix, params: &WeightParams, form: DetForm) -> Result<CheckResult> {
    same_dim(t.dim(), s.dim())?;
    params.require_conjugate()?;
    params.require_m_r()?;
    if !s.is_definite() {
        return Err(Error::Singular { min_eigenvalue: s.min_eigenvalue() });
    }
    let n = t.dim() as i32;
    let mi = params.m as i32;
    let m = params.m as f64;
    let lead = (t.power(1.0 / params.p)?.det() * s.power(1.0 / params.q)?.det()).powi(mi);
    let s_inv_half = s.inverse_sqrt()?;
    let y = PositiveMatrix::new(HermitianMatrix::from_hermitian_part(&(s_inv_half.matrix() * &(t.matrix() * s_inv_half.matrix()))))?;
    let second = match form {
        DetForm::Printed => {
            let s_half = s.power(m / 2.0)?;
            let inner = s_half.matrix() * &(y.power(m)?.matrix() * s_half.matrix());
            let z = t.power(m)?.matrix().try_add(s.power(m)?.matrix())?.try_sub(&inner.scale(2.0))?;
            hermitian_det(&HermitianMatrix::from_hermitian_part(&z))?.powi(2)
        }
        DetForm::Proof => {
            let d = y.power(m / 2.0)?.matrix().try_sub(&ComplexMatrix::identity(t.dim()))?;
            s.det().powi(mi) * hermitian_det(&HermitianMatrix::from_hermitian_part(&d))?.powi(2)
        }
    };
    let lhs = lead + params.r0().powi(mi * n) * second;
    let young = PositiveMatrix::new(HermitianMatrix::from_hermitian_part(&young_sum(t, s, params)?))?;
    let rhs = young.det().powf(m / params.r_exp);
    Ok(CheckResult::single(CheckPart::le("rashidq1", lhs, rhs)))
}

/// How the refinement term of the norm Young inequality reads its second product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormReading {
    /// `|||SX|||` in the refinement term.
    Printed,
    /// `|||XS|||` throughout.
    Consistent,
}

/// Heinz–Kato with `ϑ = 1/p`, then the refined Young inequality for a
/// unitarily invariant norm, per selector.
pub fn check_uinorm_young(
    t: &PositiveMatrix,
    s: &PositiveMatrix,
    x: &ComplexMatrix,
    params: &WeightParams,
    sels: &[NormSelector],
    reading: NormReading,
) -> Result<CheckResult> {
    same_dim(t.dim(), s.dim())?;
    same_dim(t.dim(), x.dim())?;
    params.require_conjugate()?;
    params.require_m_r()?;
    validate_norms(sels, x.dim())?;
    let (m, r) = (params.m as f64, params.r_exp);
    let mi = params.m as i32;
    let mid = norms_of(&(t.power(1.0 / params.p)?.matrix() * &(x * s.power(1.0 / params.q)?.matrix())), sels)?;
    let tx = norms_of(&(t.matrix() * x), sels)?;
    let xs = norms_of(&(x * s.matrix()), sels)?;
    let w = match reading {
        NormReading::Printed => norms_of(&(s.matrix() * x), sels)?,
        NormReading::Consistent => xs.clone(),
    };
    let (a, b) = (1.0 / params.p, 1.0 / params.q);
    let r0 = params.r0();
    let mut parts = Vec::new();
    for (j, sel) in sels.iter().enumerate() {
        parts.push(CheckPart::le(format!("heinz_kato:{sel}"), mid[j], tx[j].powf(a) * xs[j].powf(b)));
        let gap = tx[j].powf(m / 2.0) - w[j].powf(m / 2.0);
        let lhs = mid[j].powi(mi) + r0.powi(mi) * gap * gap;
        let rhs = (a * tx[j].powf(r) + b * xs[j].powf(r)).powf(m / r);
        parts.push(CheckPart::le(format!("young:{sel}"), lhs, rhs));
    }
    Ok(CheckResult::of(parts))
}

/// `|||T^ϑXS^{1−ϑ}||| ≤ |||TX|||^ϑ |||XS|||^{1−ϑ}` per selector.
pub fn check_heinz_kato_norm(t: &PositiveMatrix, s: &PositiveMatrix, x: &ComplexMatrix, theta: f64, sels: &[NormSelector]) -> Result<CheckResult> {
    same_dim(t.dim(), s.dim())?;
    same_dim(t.dim(), x.dim())?;
    WeightParams::require_unit("theta", theta)?;
    validate_norms(sels, x.dim())?;
    let lhs = norms_of(&(t.power(theta)?.matrix() * &(x * s.power(1.0 - theta)?.matrix())), sels)?;
    let tx = norms_of(&(t.matrix() * x), sels)?;
    let xs = norms_of(&(x * s.matrix()), sels)?;
    Ok(CheckResult::of(
        sels.iter().enumerate().map(|(j, sel)| CheckPart::le(sel.to_string(), lhs[j], tx[j].powf(theta) * xs[j].powf(1.0 - theta))).collect(),
    ))
}

/// `tr|T^ϑS^{1−ϑ}| ≤ (tr T)^ϑ (tr S)^{1−ϑ}`.
pub fn check_heinz_kato_trace(t: &PositiveMatrix, s: &PositiveMatrix, theta: f64) -> Result<CheckResult> {
    same_dim(t.dim(), s.dim())?;
    WeightParams::require_unit("theta", theta)?;
    let lhs = trace_norm(&(t.power(theta)?.matrix() * s.power(1.0 - theta)?.matrix()));
    Ok(CheckResult::single(CheckPart::le("trace", lhs, t.trace().powf(theta) * s.trace().powf(1.0 - theta))))
}

fn require_family(ts: &[PositiveMatrix], w: &WeightVector) -> Result<()> {
    if ts.is_empty() {
        return Err(Error::param("at least one matrix is required"));
    }
    same_dim(ts.len(), w.len())?;
    ts.iter().try_for_each(|t| same_dim(ts[0].dim(), t.dim()))
}

fn weighted_product(ts: &[PositiveMatrix], w: &WeightVector) -> Result<ComplexMatrix> {
    let mut acc = ComplexMatrix::identity(ts[0].dim());
    for (t, &th) in ts.iter().zip(&w.weights) {
        acc = &acc * t.power(th)?.matrix();
    }
    Ok(acc)
}

fn sum_of(ts: &[PositiveMatrix], coeffs: impl Fn(usize) -> f64) -> Result<ComplexMatrix> {
    let mut acc = ComplexMatrix::zeros(ts[0].dim());
    for (k, t) in ts.iter().enumerate() {
        acc = acc.try_add(&t.matrix().scale(coeffs(k)))?;
    }
    Ok(acc)
}

/// Weighted AM–GM refinement in the trace (`trace1`) and trace-norm (`tracethree`) forms.
/// `k` is the number of matrices.
pub fn check_multi_trace(ts: &[PositiveMatrix], w: &WeightVector) -> Result<CheckResult> {
    require_family(ts, w)?;
    let k = ts.len() as f64;
    let r = w.min_weight();
    let head = trace_norm(&weighted_product(ts, w)?);

    let tr: Vec<f64> = ts.iter().map(|t| t.trace()).collect();
    let geo = tr.iter().product::<f64>().powf(1.0 / k);
    let lhs = head + r * (tr.iter().sum::<f64>() - k * geo);
    let rhs: f64 = tr.iter().zip(&w.weights).map(|(a, th)| a * th).sum();
    let trace1 = CheckPart::le("trace1", lhs, rhs);

    let nrm: Vec<f64> = ts.iter().map(|t| trace_norm(t.matrix())).collect();
    let geo = nrm.iter().product::<f64>().powf(1.0 / k);
    let lhs = head + r * (trace_norm(&sum_of(ts, |_| 1.0)?) - k * geo);
    let rhs = trace_norm(&sum_of(ts, |i| w.weights[i])?);
    let tracethree = CheckPart::le("tracethree", lhs, rhs);
    Ok(CheckResult::of(vec![trace1, tracethree]))
}

/// Refinement coefficient of the determinant AM–GM refinement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DetCoeff {
    /// `r = min ϑ_k`
    R,
    /// `r^n`, `n` the matrix dimension
    RPowN,
}

fn psd_det(m: &ComplexMatrix) -> Result<f64> {
    Ok(PositiveMatrix::new(HermitianMatrix::from_hermitian_part(m))?.det())
}

/// `Π det(T_k)^{ϑ_k} + c(det(ΣT_k) − k(Π det T_k)^{1/k}) ≤ det(Σϑ_kT_k)`, plus the
/// Minkowski bound on the first two matrices when there are at least two.
pub fn check_multi_det(ts: &[PositiveMatrix], w: &WeightVector, coeff: DetCoeff) -> Result<CheckResult> {
    require_family(ts, w)?;
    if let Some(t) = ts.iter().find(|t| !t.is_definite()) {
        return Err(Error::Singular { min_eigenvalue: t.min_eigenvalue() });
    }
    let k = ts.len() as f64;
    let n = ts[0].dim() as i32;
    let r = w.min_weight();
    let c = match coeff {
        DetCoeff::R => r,
        DetCoeff::RPowN => r.powi(n),
    };
    let dets: Vec<f64> = ts.iter().map(|t| t.det()).collect();
    let head: f64 = dets.iter().zip(&w.weights).map(|(d, th)| d.powf(*th)).product();
    let geo = dets.iter().product::<f64>().powf(1.0 / k);
    let lhs = head + c * (psd_det(&sum_of(ts, |_| 1.0)?)? - k * geo);
    let rhs = psd_det(&sum_of(ts, |i| w.weights[i])?)?;
    let mut parts = vec![CheckPart::le("deter1", lhs, rhs)];
    if ts.len() >= 2 {
        parts.push(minkowski_part(&ts[0], &ts[1])?);
    }
    Ok(CheckResult::of(parts))
}

fn minkowski_part(t: &PositiveMatrix, s: &PositiveMatrix) -> Result<CheckPart> {
    same_dim(t.dim(), s.dim())?;
    let inv_n = 1.0 / t.dim() as f64;
    let sum = psd_det(&t.matrix().try_add(s.matrix())?)?;
    Ok(CheckPart::le("minkowski", t.det().powf(inv_n) + s.det().powf(inv_n), sum.powf(inv_n)))
}

/// `det(T+S)^{1/n} ≥ det(T)^{1/n} + det(S)^{1/n}`.
pub fn check_minkowski(t: &PositiveMatrix, s: &PositiveMatrix) -> Result<CheckResult> {
    Ok(CheckResult::single(minkowski_part(t, s)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstForm {
    /// Unweighted mean of traces, exponents `1/Γ_n`.
    Printed,
    /// `γ_k`-weighted mean, exponents `γ_k/Γ_n`.
    Proof,
}

/// `Π(tr T_k + √(1 + tr T_k²))^{e_k} ≤ a + √(1 + a²)` with `a` the (weighted) mean trace.
pub fn check_constrained_trace(ts: &[PositiveMatrix], w: &WeightVector, form: ConstForm) -> Result<CheckResult> {
    require_family(ts, w)?;
    let g = w.gamma_total;
    if !(g > 0.0) {
        return Err(Error::param("Gamma_n must be > 0"));
    }
    let tr: Vec<f64> = ts.iter().map(|t| t.trace()).collect();
    let tr2: Vec<f64> = ts.iter().map(|t| (t.matrix() * t.matrix()).trace().re).collect();
    let (a, expo): (f64, Vec<f64>) = match form {
        ConstForm::Printed => (tr.iter().sum::<f64>() / g, vec![1.0 / g; ts.len()]),
        ConstForm::Proof => (
            tr.iter().zip(&w.gammas).map(|(t, c)| t * c).sum::<f64>() / g,
            w.gammas.iter().map(|c| c / g).collect(),
        ),
    };
    let lhs: f64 = tr.iter().zip(&tr2).zip(&expo).map(|((t, t2), e)| (t + (1.0 + t2).sqrt()).powf(*e)).product();
    Ok(CheckResult::single(CheckPart::le("const1", lhs, a + (1.0 + a * a).sqrt())))
}
