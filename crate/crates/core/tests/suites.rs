use heinzlab::harness::gen_positive;
use heinzlab::linalg::*;
use heinzlab::scalar::{CheckResult, WeightParams, WeightVector};
use heinzlab::suites::*;
use heinzlab::Error;
use heinzlab_oracle as oracle;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1f64.max(a.abs()).max(b.abs())
}

fn registry() -> SuiteRegistry {
    SuiteRegistry::standard()
}

fn ctx() -> SampleContext {
    SampleContext::default()
}

fn to_oracle(m: &ComplexMatrix) -> oracle::Mat {
    let e: Vec<(f64, f64)> = m.entries().iter().map(|z| (z.re, z.im)).collect();
    oracle::Mat::from_entries(m.dim(), &e)
}

fn all_norms(dim: usize) -> Vec<NormSelector> {
    NormSpec::expand(&NormSpec::standard(), dim)
}

/// Asserts that two results have the same labels and sides within `tol`.
fn assert_same_sides(a: &CheckResult, b: &CheckResult, tol: f64, what: &str) {
    assert_eq!(a.parts.len(), b.parts.len(), "{what}: part counts differ");
    for (p, q) in a.parts.iter().zip(&b.parts) {
        assert_eq!(p.label, q.label, "{what}");
        assert!(rel(p.lhs, q.lhs) <= tol, "{what} `{}`: lhs {} vs {}", p.label, p.lhs, q.lhs);
        assert!(rel(p.rhs, q.rhs) <= tol, "{what} `{}`: rhs {} vs {}", p.label, p.rhs, q.rhs);
    }
}

#[test]
fn registry_ids_are_unique() {
    let reg = registry();
    let ids = reg.ids();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
    for id in ["S1.young.Y1", "S2.rahma1.psi", "S3.heinz.A1", "S4.heinz.O1", "S5.det.deter1", "S0.selftest"] {
        assert!(ids.contains(&id), "{id}");
    }
}

#[test]
fn all_excludes_internal_suites() {
    let reg = registry();
    let all = reg.resolve(&["all".to_string()]).unwrap();
    assert!(all.iter().all(|s| s.id() != "S0.selftest"));
    assert_eq!(all.len(), reg.ids().len() - 1);
    let picked = reg.resolve(&["S5.ando".into(), "S1.young.Y1".into(), "S5.ando".into()]).unwrap();
    let ids: Vec<_> = picked.iter().map(|s| s.id()).collect();
    assert_eq!(ids, ["S1.young.Y1", "S5.ando"]);
    assert_eq!(reg.resolve(&["S0.selftest".into()]).unwrap().len(), 1);
}

#[test]
fn unknown_suite_lists_valid_ids() {
    let reg = registry();
    match reg.get("bogus") {
        Err(Error::UnknownSuite { id, valid }) => {
            assert_eq!(id, "bogus");
            assert!(valid.iter().any(|v| v == "S1.young.Y1"));
        }
        other => panic!("unexpected {:?}", other.map(|s| s.id())),
    }
    assert!(reg.resolve(&["all".into(), "nope".into()]).is_err());
}

#[test]
fn duplicate_registration_is_rejected() {
    let mut reg = registry();
    assert!(matches!(reg.register(Box::new(Alias("S1.young.Y1"))), Err(Error::Parameter(_))));
    let mut fresh = SuiteRegistry::empty();
    assert!(fresh.ids().is_empty());
    fresh.register(Box::new(Alias("X.alias"))).unwrap();
    assert!(fresh.register(Box::new(Alias("X.alias"))).is_err());
}

struct Alias(&'static str);

impl InequalitySuite for Alias {
    fn id(&self) -> &'static str {
        self.0
    }
    fn title(&self) -> &'static str {
        "alias"
    }
    fn statement(&self) -> &'static str {
        "0 ≤ 1"
    }
    fn status(&self) -> SuiteStatus {
        SuiteStatus::Asserted
    }
    fn shape(&self) -> SuiteShape {
        SuiteShape::Scalar
    }
    fn sample(&self, seed: u64, dim: usize, ctx: &SampleContext) -> heinzlab::Result<InequalityCase> {
        Ok(InequalityCase::new(self.0, dim, seed, ctx.grids.clone()))
    }
    fn evaluate(&self, _case: &InequalityCase) -> heinzlab::Result<CheckResult> {
        Ok(CheckResult::single(heinzlab::scalar::CheckPart::le("x", 0.0, 1.0)))
    }
}

#[test]
fn every_suite_samples_and_evaluates_deterministically() {
    let reg = registry();
    for suite in reg.iter() {
        for dim in 1..=4 {
            for seed in [0u64, 1, 0xdead_beef] {
                let case = suite.sample(seed, dim, &ctx()).unwrap_or_else(|e| panic!("{} dim {dim}: {e}", suite.id()));
                assert_eq!(case, suite.sample(seed, dim, &ctx()).unwrap());
                assert_eq!(case.suite_id, suite.id());
                if suite.shape() == SuiteShape::Scalar {
                    assert_eq!(case.dim, 1);
                }
                let r = suite.evaluate(&case).unwrap_or_else(|e| panic!("{} dim {dim} seed {seed}: {e}", suite.id()));
                let again = suite.evaluate(&case).unwrap();
                assert_eq!(r, again);
                let back = InequalityCase::from_json(&case.to_json().unwrap()).unwrap();
                assert_eq!(back, case);
                assert_eq!(reg.evaluate(&back).unwrap(), r, "{}", suite.id());
            }
        }
    }
}

#[test]
fn case_from_another_suite_is_rejected() {
    let reg = registry();
    let case = reg.get("S1.young.Y1").unwrap().sample(3, 1, &ctx()).unwrap();
    assert!(reg.get("S1.young.Y2").unwrap().evaluate(&case).is_err());
}

#[test]
fn malformed_case_json_is_a_format_error() {
    assert!(matches!(InequalityCase::from_json("{\"suite_id\": 3}"), Err(Error::Format(_))));
    let reg = registry();
    let mut case = reg.get("S5.ando").unwrap().sample(3, 2, &ctx()).unwrap();
    case.dim = 3;
    assert!(matches!(InequalityCase::from_json(&case.to_json().unwrap()), Err(Error::DimMismatch { .. })));
}

#[test]
fn asserted_suites_have_tight_equality_cases() {
    let reg = registry();
    for suite in reg.iter().filter(|s| s.status() == SuiteStatus::Asserted) {
        for dim in 1..=4 {
            let case = suite.equality_case(dim, &ctx()).unwrap_or_else(|| panic!("{} has no equality case", suite.id()));
            let r = suite.evaluate(&case).unwrap_or_else(|e| panic!("{} dim {dim}: {e}", suite.id()));
            for p in &r.parts {
                assert!(p.slack.abs() <= 1e-12 * p.scale(), "{} dim {dim} `{}`: slack {}", suite.id(), p.label, p.slack);
            }
        }
    }
}

#[test]
fn recorded_suites_have_no_equality_case_requirement() {
    let reg = registry();
    let recorded: Vec<_> = reg.iter().filter(|s| s.status() == SuiteStatus::Recorded).map(|s| s.id()).collect();
    for id in [
        "S3.heinz.A1",
        "S3.heinz.A2",
        "S4.heinz.O1",
        "S5.det.rashidq1",
        "S5.det.deter1",
        "S5.trace.man2",
        "S5.trace.const1",
        "S5.norm.ghadeer11",
    ] {
        assert!(recorded.contains(&id), "{id}");
    }
    assert!(!recorded.contains(&"S3.heinz.A1.derived"));
}

#[test]
fn dim_one_cases_match_scalar_counterparts() {
    let reg = registry();
    for suite in reg.iter() {
        let Some(_) = suite.scalar_counterpart(&suite.sample(0, 1, &ctx()).unwrap()) else {
            assert_eq!(suite.shape(), SuiteShape::Scalar, "{} lacks a counterpart", suite.id());
            continue;
        };
        for seed in 0..40u64 {
            let case = suite.sample(seed, 1, &ctx()).unwrap();
            let m = suite.evaluate(&case).unwrap();
            let s = suite.scalar_counterpart(&case).unwrap().unwrap();
            assert_same_sides(&m, &s, 1e-12, &format!("{} seed {seed}", suite.id()));
        }
    }
}

#[test]
fn counterpart_refuses_larger_cases() {
    let reg = registry();
    let suite = reg.get("S5.ando").unwrap();
    let case = suite.sample(0, 2, &ctx()).unwrap();
    assert!(suite.scalar_counterpart(&case).unwrap().is_err());
}

#[test]
fn schur_bound_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let n = 4;
    let s = heinzlab::harness::gen_gaussian(n, &mut rng);
    let ones = PositiveMatrix::from_matrix(ComplexMatrix::from_real(n, &vec![1.0; n * n]).unwrap()).unwrap();
    let r = check_schur_norm_bound(&ones, &s, &all_norms(n)).unwrap();
    assert!(r.passed());
    for p in &r.parts {
        assert!(rel(p.lhs, p.rhs) < 1e-12, "{}", p.label);
    }
    // T = I picks out the diagonal of S
    let r = check_schur_norm_bound(&PositiveMatrix::identity(n), &s, &all_norms(n)).unwrap();
    assert!(r.passed());
    let d: Vec<f64> = s.diagonal().iter().map(|z| z.norm()).collect();
    let spectral = r.part("schatten:inf").unwrap();
    assert!(rel(spectral.lhs, d.iter().cloned().fold(0.0, f64::max)) < 1e-12);
    let t = gen_positive(n, 0.1, 10.0, &mut rng).unwrap();
    assert!(check_schur_norm_bound(&t, &s, &all_norms(n)).unwrap().passed());
}

#[test]
fn hhm2_examples() {
    let r = check_hhm2_psd(&[2.0], 0.3, 1.0).unwrap();
    assert!(r.passed());
    assert!(r.rhs > 0.0);
    let r = check_hhm2_psd(&[1.7; 3], -0.5, 2.0).unwrap();
    assert!(r.slack.abs() < 1e-12);
    let r = check_hhm2_psd(&[0.3, 1.1, 4.0, 7.5], 0.7, 1.3).unwrap();
    assert!(r.rhs >= -1e-10);
    assert!(check_hhm2_psd(&[1.0, 2.0], 1.5, 0.0).is_err());
    assert!(check_hhm2_psd(&[1.0, 2.0], 0.5, -2.0).is_err());
}

#[test]
fn hhm2_kernel_matches_its_formula() {
    let k = [0.5, 2.0, 3.0];
    let m = hhm2_kernel(&k, 0.4, 1.0).unwrap();
    let raw = |i: usize, j: usize| (k[i].powf(0.4) + k[j].powf(0.4)) / (k[i] * k[i] + k[i] * k[j] + k[j] * k[j]);
    // the kernel is a positive diagonal congruence of the raw one
    let ratio = m.get(0, 1).re / raw(0, 1);
    let d0 = (m.get(0, 0).re / raw(0, 0)).sqrt();
    let d1 = (m.get(1, 1).re / raw(1, 1)).sqrt();
    assert!(rel(ratio, d0 * d1) < 1e-12);
}

fn inputs_case(id: &str, t: ComplexMatrix, s: ComplexMatrix, x: ComplexMatrix, kappa: f64) -> InequalityCase {
    let n = t.dim();
    let mut case = InequalityCase::new(id, n, 0, ParameterGrids::default());
    case.params = WeightParams::with_kappa(kappa);
    case.operands = vec![t, s, x];
    case.norms = all_norms(n);
    case
}

#[test]
fn phi_is_constant_at_kappa_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let t = gen_positive(3, 0.1, 10.0, &mut rng).unwrap();
    let s = gen_positive(3, 0.1, 10.0, &mut rng).unwrap();
    let x = heinzlab::harness::gen_gaussian(3, &mut rng);
    let case = inputs_case("S2.refund1.phi", t.matrix().clone(), s.matrix().clone(), x, 0.0);
    let r = registry().evaluate(&case).unwrap();
    for p in &r.parts {
        assert!(p.slack.abs() <= 1e-12 * p.scale(), "{}: {}", p.label, p.slack);
    }
}

#[test]
fn chain_with_identities_is_tight() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let x = heinzlab::harness::gen_gaussian(3, &mut rng);
    let id = ComplexMatrix::identity(3);
    let case = inputs_case("S2.refund2.chain", id.clone(), id, x.clone(), 0.3);
    let r = registry().evaluate(&case).unwrap();
    let frob = ui_norm(&x, NormSelector::Frobenius).unwrap();
    for p in &r.parts {
        assert!(p.slack.abs() <= 1e-12 * p.scale(), "{}", p.label);
    }
    let left = r.part("left:schatten:2").unwrap();
    assert!(rel(left.lhs, frob) < 1e-12);
}

#[test]
fn chain_collapses_at_half() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let t = gen_positive(3, 0.1, 10.0, &mut rng).unwrap();
    let s = gen_positive(3, 0.1, 10.0, &mut rng).unwrap();
    let x = heinzlab::harness::gen_gaussian(3, &mut rng);
    let case = inputs_case("S2.refund2.chain", t.matrix().clone(), s.matrix().clone(), x, 0.5);
    let r = registry().evaluate(&case).unwrap();
    assert!(r.passed());
    for p in r.parts.iter().filter(|p| p.label.starts_with("left:")) {
        assert!(rel(p.lhs, p.rhs) < 1e-12, "{}", p.label);
    }
}

#[test]
fn ando_identity_example() {
    let n = 3;
    let r = check_ando(&PositiveMatrix::identity(n), &PositiveMatrix::identity(n), 2.0, 2.0).unwrap();
    assert_eq!(r.parts.len(), n);
    for p in &r.parts {
        assert!((p.lhs - 1.0).abs() < 1e-15 && (p.rhs - 1.0).abs() < 1e-15);
    }
}

#[test]
fn ando_commuting_diagonals_follow_scalar_young() {
    let t = PositiveMatrix::diagonal(&[1.0, 3.0, 0.5]).unwrap();
    let s = PositiveMatrix::diagonal(&[2.0, 0.25, 4.0]).unwrap();
    let (p, q) = (3.0, 1.5);
    let r = check_ando(&t, &s, p, q).unwrap();
    let mut lhs: Vec<f64> = [2.0, 0.75, 2.0].to_vec();
    let mut rhs: Vec<f64> = [(1.0f64, 2.0f64), (3.0, 0.25), (0.5, 4.0)].iter().map(|(a, b)| a.powf(p) / p + b.powf(q) / q).collect();
    lhs.sort_by(|a, b| b.total_cmp(a));
    rhs.sort_by(|a, b| b.total_cmp(a));
    for (j, part) in r.parts.iter().enumerate() {
        assert!(rel(part.lhs, lhs[j]) < 1e-12 && rel(part.rhs, rhs[j]) < 1e-12, "{}", part.label);
    }
    assert!(r.passed());
}

#[test]
fn det_young_with_equal_operands() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let t = gen_positive(3, 0.5, 2.0, &mut rng).unwrap();
    let params = WeightParams { m: 1, r_exp: 1.0, ..WeightParams::default() }.with_p(2.0);
    for form in [DetForm::Printed, DetForm::Proof] {
        let r = check_det_young(&t, &t, &params, form).unwrap();
        assert!(r.slack.abs() <= 1e-12 * r.parts[0].scale(), "{form:?}: {}", r.slack);
    }
}

#[test]
fn det_young_commuting_diagonals_match_products() {
    let d1 = [1.0, 2.0, 0.5];
    let d2 = [3.0, 0.7, 1.5];
    let t = PositiveMatrix::diagonal(&d1).unwrap();
    let s = PositiveMatrix::diagonal(&d2).unwrap();
    let p = WeightParams { m: 2, r_exp: 2.0, ..WeightParams::default() }.with_p(3.0);
    let r = check_det_young(&t, &s, &p, DetForm::Proof).unwrap();
    let (m, n) = (2, 3);
    let mut geo = 1.0;
    let mut gap = 1.0;
    let mut young = 1.0;
    let mut dets = 1.0;
    for i in 0..3 {
        let (a, b): (f64, f64) = (d1[i], d2[i]);
        geo *= a.powf(1.0 / p.p) * b.powf(1.0 / p.q);
        gap *= (a / b).powf(m as f64 / 2.0) - 1.0;
        young *= a.powf(p.r_exp) / p.p + b.powf(p.r_exp) / p.q;
        dets *= b;
    }
    let lhs = geo.powi(m) + p.r0().powi(m * n) * dets.powi(m) * gap * gap;
    let rhs = young.powf(m as f64 / p.r_exp);
    assert!(rel(r.lhs, lhs) < 1e-12, "{} vs {lhs}", r.lhs);
    assert!(rel(r.rhs, rhs) < 1e-12);
}

#[test]
fn uinorm_young_identity_x_is_tight() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let t = gen_positive(3, 0.2, 5.0, &mut rng).unwrap();
    let params = WeightParams { m: 1, r_exp: 1.0, ..WeightParams::default() }.with_p(2.0);
    let r = check_uinorm_young(&t, &t, &ComplexMatrix::identity(3), &params, &all_norms(3), NormReading::Consistent).unwrap();
    for p in &r.parts {
        assert!(p.slack.abs() <= 1e-12 * p.scale(), "{}: {}", p.label, p.slack);
    }
}

#[test]
fn multi_trace_and_det_with_equal_operands() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let t = gen_positive(3, 0.2, 5.0, &mut rng).unwrap();
    let w = WeightVector::uniform(2);
    let r = check_multi_trace(&[t.clone(), t.clone()], &w).unwrap();
    assert!(r.parts.iter().all(|p| p.slack.abs() <= 1e-12 * p.scale()));
    for coeff in [DetCoeff::R, DetCoeff::RPowN] {
        let r = check_multi_det(&[t.clone(), t.clone()], &w, coeff).unwrap();
        let mk = r.part("minkowski").unwrap();
        assert!(mk.slack.abs() <= 1e-12 * mk.scale());
        assert!(rel(mk.rhs, 2.0 * t.det().powf(1.0 / 3.0)) < 1e-12);
    }
    let r = check_minkowski(&t, &t).unwrap();
    assert!(r.slack.abs() <= 1e-12 * r.parts[0].scale());
}

#[test]
fn multi_det_commuting_pair() {
    let t = PositiveMatrix::diagonal(&[1.0, 2.0]).unwrap();
    let s = PositiveMatrix::diagonal(&[3.0, 0.5]).unwrap();
    let w = WeightVector::from_weights(vec![0.3, 0.7]).unwrap();
    let r = check_multi_det(&[t.clone(), s.clone()], &w, DetCoeff::R).unwrap();
    let lhs = 2f64.powf(0.3) * 1.5f64.powf(0.7) + 0.3 * (4.0 * 2.5 - 2.0 * (2.0f64 * 1.5).sqrt());
    let rhs = (0.3 + 2.1) * (0.6 + 0.35);
    let d = r.part("deter1").unwrap();
    assert!(rel(d.lhs, lhs) < 1e-12 && rel(d.rhs, rhs) < 1e-12);
    assert!(check_multi_trace(&[t, s], &WeightVector::uniform(2)).unwrap().passed());
}

#[test]
fn constrained_trace_single_scalar_is_equality() {
    let t = PositiveMatrix::diagonal(&[2.3]).unwrap();
    let w = WeightVector::from_gammas(vec![1.0]).unwrap();
    for form in [ConstForm::Printed, ConstForm::Proof] {
        let r = check_constrained_trace(std::slice::from_ref(&t), &w, form).unwrap();
        assert!(r.slack.abs() <= 1e-12 * r.parts[0].scale(), "{form:?}");
    }
}

#[test]
fn operator_heinz_scalar_multiples_reduce_to_scalar_check() {
    let reg = registry();
    for id in ["S4.heinz.O1", "S4.heinz.A2op", "S4.heinz.O1.derived", "S4.heinz.A2op.derived"] {
        let suite = reg.get(id).unwrap();
        let mut case = suite.sample(21, 3, &ctx()).unwrap();
        let cond = case.condition.unwrap();
        let (t, s) = match cond.variant {
            ConditionVariant::A => (cond.m_prime, cond.big_m_prime),
            ConditionVariant::B => (cond.big_m, cond.m),
        };
        case.operands = vec![ComplexMatrix::identity(3).scale(t), ComplexMatrix::identity(3).scale(s)];
        let m = suite.evaluate(&case).unwrap();
        let mut one = case.clone();
        one.dim = 1;
        one.operands = vec![ComplexMatrix::scalar(t), ComplexMatrix::scalar(s)];
        let c = suite.scalar_counterpart(&one).unwrap().unwrap();
        assert!(rel(m.slack, c.slack) < 1e-12 * 10.0 || (m.slack - c.slack).abs() < 1e-12, "{id}");
        assert!(rel(m.lhs, c.lhs) < 1e-12 && rel(m.rhs, c.rhs) < 1e-12, "{id}");
    }
}

#[test]
fn operator_heinz_near_kappa_limit_is_finite() {
    let reg = registry();
    let suite = reg.get("S4.heinz.O1.derived").unwrap();
    let mut case = suite.sample(4, 3, &ctx()).unwrap();
    case.params.kappa = 0.4;
    case.params.nu = 0.4 - 1e-6;
    let r = suite.evaluate(&case).unwrap();
    assert!(r.lhs.is_finite() && r.rhs.is_finite() && r.slack.is_finite());
}

#[test]
fn norm_spec_expansion() {
    let sels = NormSpec::expand(&NormSpec::standard(), 3);
    let names: Vec<String> = sels.iter().map(|s| s.to_string()).collect();
    for n in ["kyfan:1", "kyfan:2", "schatten:1", "schatten:2", "schatten:3", "schatten:inf"] {
        assert!(names.contains(&n.to_string()), "{n} in {names:?}");
    }
}

#[test]
fn default_grids() {
    let g = ParameterGrids::default();
    assert_eq!(g.chain_t, [-1.9, -1.0, 0.0, 1.0, 2.0]);
    assert_eq!(g.mu, [0.25, 0.5, 0.75]);
    assert_eq!(*g.theta_low.last().unwrap(), 0.5);
    assert_eq!(g.theta_high[0], 0.5);
}

#[test]
fn trace_young_matches_extended_precision() {
    let reg = registry();
    let suite = reg.get("S5.trace.man2").unwrap();
    for seed in 0..10 {
        let case = suite.sample(seed, 3, &ctx()).unwrap();
        let r = suite.evaluate(&case).unwrap();
        let p = &case.params;
        let y = oracle::YoungParams { p: p.p, q: p.q, m: p.m, r: p.r_exp };
        let refs = oracle::trace_young(&to_oracle(&case.operands[0]), &to_oracle(&case.operands[1]), y);
        for rp in refs {
            let part = r.part(&rp.label).unwrap();
            assert!(rel(part.lhs, oracle::to_f64(rp.lhs)) < 1e-12, "seed {seed} {}", rp.label);
            assert!(rel(part.rhs, oracle::to_f64(rp.rhs)) < 1e-12, "seed {seed} {}", rp.label);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classical_suites_pass_on_samples(seed in any::<u64>(), dim in 1usize..5) {
        let reg = registry();
        for id in ["S1.young.Y1", "S1.young.Y2", "S1.young.Y3", "S1.heinz.A9", "S1.heron.A20", "S5.ando", "S5.norm.heinz_kato", "S5.det.minkowski", "S2.hhm2.psd"] {
            let suite = reg.get(id).unwrap();
            let case = suite.sample(seed, dim, &ctx()).unwrap();
            let r = suite.evaluate(&case).unwrap();
            prop_assert!(r.passed(), "{} {:?}", id, r.slack);
        }
    }

    #[test]
    fn derived_heinz_forms_pass(seed in any::<u64>()) {
        let reg = registry();
        for id in ["S3.lemma.B1.derived", "S3.lemma.B3.derived", "S3.heinz.A1.derived", "S3.heinz.A2.derived"] {
            let suite = reg.get(id).unwrap();
            let r = suite.evaluate(&suite.sample(seed, 1, &ctx()).unwrap()).unwrap();
            prop_assert!(r.passed(), "{} {:?}", id, r.slack);
        }
    }

    #[test]
    fn case_json_round_trip_is_exact(seed in any::<u64>(), dim in 1usize..4, pick in 0usize..64) {
        let reg = registry();
        let ids = reg.ids();
        let suite = reg.get(ids[pick % ids.len()]).unwrap();
        let case = suite.sample(seed, dim, &ctx()).unwrap();
        let back = InequalityCase::from_json(&case.to_json().unwrap()).unwrap();
        prop_assert_eq!(&back, &case);
    }
}
