use serde::{Deserialize, Serialize};

use super::{heinz, heron, kant, nabla, sharp, CheckPart, CheckResult, ScalarPair, WeightParams, WeightVector};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum YoungDirection {
    RefineA5,
    ReverseA5,
    RefineA6,
    ReverseA7,
    ReverseA8,
}

impl YoungDirection {
    pub const ALL: [YoungDirection; 5] =
        [Self::RefineA5, Self::ReverseA5, Self::RefineA6, Self::ReverseA7, Self::ReverseA8];
}

/// Which reading of a statement to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Form {
    /// Exactly as printed.
    PaperStated,
    /// The version the derivation actually produces.
    DerivedCorrected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LemmaKind {
    B1,
    B3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HeinzKind {
    A1,
    A2,
}

/// `ρ^κσ^{1−κ} ≤ κρ + (1−κ)σ`.
pub fn check_young(pair: &ScalarPair, params: &WeightParams) -> Result<CheckResult> {
    pair.validate()?;
    params.require_kappa()?;
    let (a, b, k) = (pair.rho, pair.sigma, params.kappa);
    Ok(CheckResult::single(CheckPart::le("young", sharp(a, b, k), nabla(a, b, k))))
}

/// `√(ρσ) ≤ (ρ+σ)/2`.
pub fn check_am_gm(pair: &ScalarPair) -> Result<CheckResult> {
    pair.validate()?;
    let (a, b) = (pair.rho, pair.sigma);
    Ok(CheckResult::single(CheckPart::le("am_gm", (a * b).sqrt(), (a + b) * 0.5)))
}

/// `√(ρσ) ≤ H_κ ≤ (ρ+σ)/2`.
pub fn check_heinz_interpolation(pair: &ScalarPair, params: &WeightParams) -> Result<CheckResult> {
    pair.validate()?;
    params.require_kappa()?;
    let (a, b) = (pair.rho, pair.sigma);
    let h = heinz(a, b, params.kappa);
    Ok(CheckResult::of(vec![
        CheckPart::le("geometric_below", (a * b).sqrt(), h),
        CheckPart::le("arithmetic_above", h, (a + b) * 0.5),
    ]))
}

/// `(ρ^κσ^{1−κ})^m + r₀^m(ρ^{m/2} − σ^{m/2})² ≤ (κρ^r + (1−κ)σ^r)^{m/r}`, `r₀ = min{κ, 1−κ}`.
pub fn check_young_refined(pair: &ScalarPair, params: &WeightParams) -> Result<CheckResult> {
    pair.validate()?;
    params.require_kappa()?;
    params.require_m_r()?;
    let k = params.kappa;
    Ok(CheckResult::single(refined_young_part("young_refined", pair.rho, pair.sigma, k, 1.0 - k, params.m, params.r_exp)))
}

/// `(ρ^{1/p}σ^{1/q})^m + r₀^m(ρ^{m/2} − σ^{m/2})² ≤ (ρ^r/p + σ^r/q)^{m/r}`.
pub fn check_man1(pair: &ScalarPair, params: &WeightParams) -> Result<CheckResult> {
    pair.validate()?;
    params.require_conjugate()?;
    params.require_m_r()?;
    Ok(CheckResult::single(refined_young_part("man1", pair.rho, pair.sigma, 1.0 / params.p, 1.0 / params.q, params.m, params.r_exp)))
}

/// Shared body of the two refined Young forms with weights `a` on ρ and `b` on σ.
pub(crate) fn refined_young_part(label: &str, rho: f64, sigma: f64, a: f64, b: f64, m: u32, r: f64) -> CheckPart {
    let (lhs, rhs) = refined_young_sides(rho, sigma, a, b, m, r);
    CheckPart::le(label, lhs, rhs)
}

pub(crate) fn refined_young_sides(rho: f64, sigma: f64, a: f64, b: f64, m: u32, r: f64) -> (f64, f64) {
    let mf = m as f64;
    let r0 = a.min(b);
    let gap = rho.powf(mf / 2.0) - sigma.powf(mf / 2.0);
    // b = 1 − a up to rounding; the quotient form keeps ρ = σ exact
    let lhs = sharp(rho, sigma, a).powi(m as i32) + r0.powi(m as i32) * gap * gap;
    let rhs = (a * rho.powf(r) + b * sigma.powf(r)).powf(mf / r);
    (lhs, rhs)
}

/// Kantorovich-type refinements and reverses of Young's inequality with `h = σ/ρ`.
pub fn check_kantorovich_young(pair: &ScalarPair, params: &WeightParams, direction: YoungDirection) -> Result<CheckResult> {
    pair.validate()?;
    params.require_kappa()?;
    let (a, b, k) = (pair.rho, pair.sigma, params.kappa);
    let r = k.min(1.0 - k);
    let big_r = k.max(1.0 - k);
    let r1 = (2.0 * r).min(1.0 - 2.0 * r);
    let big_r1 = (2.0 * r).max(1.0 - 2.0 * r);
    let h = b / a;
    let g = sharp(a, b, k);
    let ar = nabla(a, b, k);
    let sq = (a.sqrt() - b.sqrt()).powi(2);
    let ks = kant(h.sqrt());
    let part = match direction {
        YoungDirection::RefineA5 => CheckPart::le("refine_a5", kant(h).powf(r) * g, ar),
        YoungDirection::ReverseA5 => CheckPart::le("reverse_a5", ar, kant(h).powf(big_r) * g),
        YoungDirection::RefineA6 => CheckPart::le("refine_a6", r * sq + ks.powf(r1) * g, ar),
        YoungDirection::ReverseA7 => CheckPart::le("reverse_a7", ar, ks.powf(-r1) * g + big_r * sq),
        YoungDirection::ReverseA8 => CheckPart::le("reverse_a8", ar - big_r * sq, ks.powf(big_r1) * g),
    };
    Ok(CheckResult::single(part))
}

/// Weights shared by the Heinz-type lemmas: `λ = ν/κ`, `r`, `R`, `r′`.
struct LemmaWeights {
    lambda: f64,
    r: f64,
    big_r: f64,
    r1: f64,
}

impl LemmaWeights {
    fn new(params: &WeightParams) -> Result<Self> {
        params.require_nu_below_kappa()?;
        let lambda = params.nu / params.kappa;
        let r = lambda.min(1.0 - lambda);
        Ok(LemmaWeights { lambda, r, big_r: lambda.max(1.0 - lambda), r1: (2.0 * r).min(1.0 - 2.0 * r) })
    }
}

/// The `h` entering `K(√h)`: printed `ρ/σ`, or `(ρ/σ)^κ` as the derivation yields.
fn lemma_h(pair: &ScalarPair, kappa: f64, form: Form) -> f64 {
    let x = pair.rho / pair.sigma;
    match form {
        Form::PaperStated => x,
        Form::DerivedCorrected => x.powf(kappa),
    }
}

/// `νρ + (1−ν)σ − (ν/κ)(ρ∇_κσ − ρ♯_κσ)`.
pub fn weighted_identity_rhs(pair: &ScalarPair, params: &WeightParams) -> f64 {
    let (a, b, k, nu) = (pair.rho, pair.sigma, params.kappa, params.nu);
    nu * a + (1.0 - nu) * b - (nu / k) * (nabla(a, b, k) - sharp(a, b, k))
}

/// The same quantity in its collapsed form `(ρ♯_κσ)∇_{ν/κ}σ`.
pub fn weighted_identity_collapsed(pair: &ScalarPair, params: &WeightParams) -> f64 {
    let lambda = params.nu / params.kappa;
    nabla(sharp(pair.rho, pair.sigma, params.kappa), pair.sigma, lambda)
}

pub fn check_heinz_scalar_lemmas(pair: &ScalarPair, params: &WeightParams, which: LemmaKind, form: Form) -> Result<CheckResult> {
    pair.validate()?;
    let w = LemmaWeights::new(params)?;
    let (a, b) = (pair.rho, pair.sigma);
    let h = lemma_h(pair, params.kappa, form);
    let ks = kant(h.sqrt());
    let gk = sharp(a, b, params.kappa);
    let gn = sharp(a, b, params.nu);
    let sq = (gk.sqrt() - b.sqrt()).powi(2);
    let mid = weighted_identity_rhs(pair, params);
    let part = match which {
        LemmaKind::B1 => CheckPart::le("b1", w.r * sq + ks.powf(w.r1) * gn, mid),
        LemmaKind::B3 => CheckPart::le("b3", mid, ks.powf(-w.r1) * gn + w.big_r * sq),
    };
    Ok(CheckResult::single(part))
}

/// Sides of the refined Heinz inequalities given the Kantorovich factor base `ks = K(√h)`.
pub(crate) fn heinz_refined_sides(
    h0: f64,
    hk: f64,
    hk2: f64,
    hn: f64,
    ks: f64,
    params: &WeightParams,
    which: HeinzKind,
    form: Form,
) -> Result<(f64, f64)> {
    let w = LemmaWeights::new(params)?;
    let c = match form {
        Form::PaperStated => 1.0,
        Form::DerivedCorrected => 2.0,
    };
    let bracket = hk + h0 - c * hk2;
    let mid = h0 - w.lambda * (h0 - hk);
    Ok(match which {
        HeinzKind::A1 => (w.r * bracket + ks.powf(w.r1) * hn, mid),
        HeinzKind::A2 => {
            let coeff = match form {
                Form::PaperStated => w.r,
                Form::DerivedCorrected => w.big_r,
            };
            (mid, ks.powf(-w.r1) * hn + coeff * bracket)
        }
    })
}

pub fn check_heinz_refined(pair: &ScalarPair, params: &WeightParams, form: Form, which: HeinzKind) -> Result<CheckResult> {
    pair.validate()?;
    params.require_nu_below_kappa()?;
    let (a, b, k) = (pair.rho, pair.sigma, params.kappa);
    let ks = kant(lemma_h(pair, k, form).sqrt());
    let (lhs, rhs) = heinz_refined_sides(heinz(a, b, 0.0), heinz(a, b, k), heinz(a, b, k / 2.0), heinz(a, b, params.nu), ks, params, which, form)?;
    let label = match which {
        HeinzKind::A1 => "a1",
        HeinzKind::A2 => "a2",
    };
    Ok(CheckResult::single(CheckPart::le(label, lhs, rhs)))
}

/// `H_κ ≤ F_{(2κ−1)²}`.
pub fn check_bhatia_heron(pair: &ScalarPair, kappa: f64) -> Result<CheckResult> {
    pair.validate()?;
    WeightParams::require_unit("kappa", kappa)?;
    let theta = (2.0 * kappa - 1.0).powi(2);
    Ok(CheckResult::single(CheckPart::le("bhatia_heron", heinz(pair.rho, pair.sigma, kappa), heron(pair.rho, pair.sigma, theta))))
}

fn require_omegas(weights: &WeightVector, omegas: &[f64]) -> Result<()> {
    if weights.len() != omegas.len() {
        return Err(Error::DimMismatch { left: weights.len(), right: omegas.len() });
    }
    if omegas.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
        return Err(Error::param("omegas must be positive and finite"));
    }
    Ok(())
}

/// Sides of the weighted AM–GM refinement.
pub(crate) fn furu_sides(weights: &[f64], omegas: &[f64]) -> (f64, f64) {
    let n = omegas.len() as f64;
    let r = weights.iter().copied().fold(f64::INFINITY, f64::min);
    let weighted_geo: f64 = omegas.iter().zip(weights).map(|(w, t)| w.powf(*t)).product();
    let plain_geo = omegas.iter().product::<f64>().powf(1.0 / n);
    let sum: f64 = omegas.iter().sum();
    let lhs = weighted_geo + r * (sum - n * plain_geo);
    let rhs: f64 = omegas.iter().zip(weights).map(|(w, t)| w * t).sum();
    (lhs, rhs)
}

/// `Π ω_k^{ϑ_k} + r(Σω_k − n(Πω_k)^{1/n}) ≤ Σϑ_kω_k`, `r = min ϑ_k`.
pub fn check_furu(weights: &WeightVector, omegas: &[f64]) -> Result<CheckResult> {
    require_omegas(weights, omegas)?;
    let (lhs, rhs) = furu_sides(&weights.weights, omegas);
    Ok(CheckResult::single(CheckPart::le("furu", lhs, rhs)))
}

pub(crate) fn constrained_sides(weights: &WeightVector, omegas: &[f64]) -> (f64, f64) {
    let mean: f64 = weights.gammas.iter().zip(omegas).map(|(g, w)| g * w).sum::<f64>() / weights.gamma_total;
    let big = mean + (1.0 + mean * mean).sqrt();
    let prod: f64 = weights.gammas.iter().zip(omegas).map(|(g, w)| (w + (1.0 + w * w).sqrt()).powf(*g)).product();
    (prod.powf(1.0 / weights.gamma_total), big)
}

/// `(Π(ω_k + √(1+ω_k²))^{γ_k})^{1/Γ_n} ≤ m + √(1+m²)` with `m = Σγ_kω_k / Γ_n`.
pub fn check_constrained_scalar(weights: &WeightVector, omegas: &[f64]) -> Result<CheckResult> {
    require_omegas(weights, omegas)?;
    if weights.gamma_total <= 0.0 {
        return Err(Error::param("Gamma_n must be > 0"));
    }
    let (lhs, rhs) = constrained_sides(weights, omegas);
    Ok(CheckResult::single(CheckPart::le("constrained", lhs, rhs)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: f64, b: f64) -> ScalarPair {
        ScalarPair::new(a, b).unwrap()
    }

    #[test]
    fn young_refined_examples() {
        let p = WeightParams::with_kappa(0.5);
        let r = check_young_refined(&pair(1.0, 4.0), &p).unwrap();
        assert_eq!((r.lhs, r.rhs, r.slack), (2.5, 2.5, 0.0));
        let r = check_young_refined(&pair(3.0, 2.0), &WeightParams { kappa: 0.0, m: 3, r_exp: 2.0, ..p }).unwrap();
        assert!(r.slack.abs() < 1e-12);
        let r = check_young_refined(&pair(3.0, 3.0), &p).unwrap();
        assert_eq!(r.slack, 0.0);
    }

    #[test]
    fn kantorovich_young_examples() {
        let r = check_kantorovich_young(&pair(1.0, 4.0), &WeightParams::with_kappa(0.5), YoungDirection::RefineA5).unwrap();
        assert!((r.lhs - 2.5).abs() < 1e-15 && r.rhs == 2.5);
        for d in YoungDirection::ALL {
            let r = check_kantorovich_young(&pair(2.0, 2.0), &WeightParams::with_kappa(0.3), d).unwrap();
            assert!(r.slack.abs() <= 1e-12, "{d:?}");
            let r = check_kantorovich_young(&pair(1.0, 2.0), &WeightParams::with_kappa(0.25), d).unwrap();
            assert!(r.passed(), "{d:?}");
        }
    }

    #[test]
    fn lemma_identity_and_nu_zero() {
        let p = WeightParams { kappa: 0.5, nu: 0.2, ..Default::default() };
        let s = pair(2.0, 3.0);
        assert!((weighted_identity_rhs(&s, &p) - weighted_identity_collapsed(&s, &p)).abs() < 1e-15);
        let p0 = WeightParams { nu: 0.0, ..p };
        assert_eq!(weighted_identity_rhs(&s, &p0), 3.0);
        // ν = 0: λ = 0, r = 0, r′ = 0, so b1 reads σ ≤ σ
        let r = check_heinz_scalar_lemmas(&s, &p0, LemmaKind::B1, Form::PaperStated).unwrap();
        assert_eq!((r.lhs, r.rhs), (3.0, 3.0));
    }

    #[test]
    fn lemma_rejects_nu_at_kappa() {
        let p = WeightParams { kappa: 0.4, nu: 0.4, ..Default::default() };
        assert!(matches!(check_heinz_scalar_lemmas(&pair(1.0, 2.0), &p, LemmaKind::B1, Form::PaperStated), Err(Error::Parameter(_))));
        assert!(matches!(check_heinz_refined(&pair(1.0, 2.0), &p, Form::DerivedCorrected, HeinzKind::A1), Err(Error::Parameter(_))));
    }

    #[test]
    fn derived_bracket_identity() {
        let (a, b, k) = (1.0f64, 4.0f64, 0.5f64);
        let direct = (sharp(a, b, k).sqrt() - b.sqrt()).powi(2) + (sharp(b, a, k).sqrt() - a.sqrt()).powi(2);
        let bracket = 2.0 * heinz(a, b, k) + 2.0 * heinz(a, b, 0.0) - 4.0 * heinz(a, b, k / 2.0);
        assert!((direct - 0.514718625761429).abs() < 1e-14);
        assert!((direct - bracket).abs() < 1e-14);
    }

    #[test]
    fn heinz_refined_equality_case() {
        let p = WeightParams { kappa: 0.7, nu: 0.3, ..Default::default() };
        for form in [Form::PaperStated, Form::DerivedCorrected] {
            for which in [HeinzKind::A1, HeinzKind::A2] {
                let r = check_heinz_refined(&pair(3.0, 3.0), &p, form, which).unwrap();
                // the printed bracket leaves r·H at ρ = σ, so only the derived form is tight
                if form == Form::DerivedCorrected {
                    assert!(r.slack.abs() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn bhatia_heron_examples() {
        let r = check_bhatia_heron(&pair(2.0, 8.0), 0.5).unwrap();
        assert!(r.slack.abs() < 1e-15);
        let r = check_bhatia_heron(&pair(2.0, 8.0), 0.0).unwrap();
        assert!(r.slack.abs() < 1e-14);
        let r = check_bhatia_heron(&pair(1.0, 9.0), 0.25).unwrap();
        assert!((r.lhs - 3.4641016151377544).abs() < 1e-14);
        assert_eq!(r.rhs, 3.5);
    }

    #[test]
    fn furu_examples() {
        let r = check_furu(&WeightVector::uniform(2), &[1.0, 4.0]).unwrap();
        assert_eq!((r.lhs, r.rhs), (2.5, 2.5));
        let r = check_furu(&WeightVector::uniform(3), &[1.0, 1.0, 8.0]).unwrap();
        assert!((r.lhs - 10.0 / 3.0).abs() < 1e-14 && (r.rhs - 10.0 / 3.0).abs() < 1e-15);
        let r = check_furu(&WeightVector::from_weights(vec![0.2, 0.8]).unwrap(), &[1.5, 1.5]).unwrap();
        assert!(r.slack.abs() < 1e-15);
        assert!(check_furu(&WeightVector::uniform(2), &[1.0]).is_err());
    }

    #[test]
    fn constrained_examples() {
        let r = check_constrained_scalar(&WeightVector::from_gammas(vec![1.0]).unwrap(), &[2.7]).unwrap();
        assert_eq!(r.slack, 0.0);
        let r = check_constrained_scalar(&WeightVector::from_gammas(vec![0.5, 2.0, 1.0]).unwrap(), &[1.3; 3]).unwrap();
        assert!(r.slack.abs() < 1e-14);
        let r = check_constrained_scalar(&WeightVector::from_gammas(vec![1.0, 2.0]).unwrap(), &[1.0, 3.0]).unwrap();
        assert!(r.passed() && r.slack > 0.0);
    }

    #[test]
    fn man1_reduces_to_refined_young() {
        let s = pair(0.7, 5.0);
        let base = WeightParams { m: 2, r_exp: 1.5, ..Default::default() };
        let a = check_man1(&s, &base.with_p(2.0)).unwrap();
        let b = check_young_refined(&s, &WeightParams { kappa: 0.5, ..base }).unwrap();
        assert_eq!((a.lhs, a.rhs), (b.lhs, b.rhs));
        assert!(check_man1(&s, &WeightParams { p: 3.0, q: 3.0, ..base }).is_err());
    }
}
