use super::checks::{chain_parts, monotone_parts, operator_h};
use super::*;
use crate::linalg::{ComplexMatrix, PositiveMatrix};
use crate::means::{CorollaryVariant, GeometricPencil, MeanInputs, MonotoneFunctionSpec};
use crate::scalar::*;

type SampleFn = Box<dyn Fn(&mut Sampler) -> Result<()> + Send + Sync>;
type EvalFn = Box<dyn Fn(&InequalityCase) -> Result<CheckResult> + Send + Sync>;

/// Seed of the sampler behind equality cases, for their random ingredients.
const EQUALITY_SEED: u64 = 0x5eed;

/// A suite assembled from closures.
struct TableSuite {
    id: &'static str,
    title: &'static str,
    statement: &'static str,
    status: SuiteStatus,
    shape: SuiteShape,
    sample: SampleFn,
    eval: EvalFn,
    equality: Option<SampleFn>,
    counterpart: Option<EvalFn>,
    roles: Vec<OperandRole>,
    fields: Vec<ParamField>,
    internal: bool,
}

impl TableSuite {
    fn new(
        id: &'static str,
        title: &'static str,
        statement: &'static str,
        status: SuiteStatus,
        shape: SuiteShape,
        sample: impl Fn(&mut Sampler) -> Result<()> + Send + Sync + 'static,
        eval: impl Fn(&InequalityCase) -> Result<CheckResult> + Send + Sync + 'static,
    ) -> Self {
        TableSuite {
            id,
            title,
            statement,
            status,
            shape,
            sample: Box::new(sample),
            eval: Box::new(eval),
            equality: None,
            counterpart: None,
            roles: Vec::new(),
            fields: Vec::new(),
            internal: false,
        }
    }

    fn equality(mut self, f: impl Fn(&mut Sampler) -> Result<()> + Send + Sync + 'static) -> Self {
        self.equality = Some(Box::new(f));
        self
    }

    fn counterpart(mut self, f: impl Fn(&InequalityCase) -> Result<CheckResult> + Send + Sync + 'static) -> Self {
        self.counterpart = Some(Box::new(f));
        self
    }

    fn roles(mut self, roles: &[OperandRole]) -> Self {
        self.roles = roles.to_vec();
        self
    }

    fn fields(mut self, fields: &[ParamField]) -> Self {
        self.fields = fields.to_vec();
        self
    }

    fn internal(mut self) -> Self {
        self.internal = true;
        self
    }

    fn boxed(self) -> Box<dyn InequalitySuite> {
        Box::new(self)
    }
}

impl InequalitySuite for TableSuite {
    fn id(&self) -> &'static str {
        self.id
    }

    fn title(&self) -> &'static str {
        self.title
    }

    fn statement(&self) -> &'static str {
        self.statement
    }

    fn status(&self) -> SuiteStatus {
        self.status
    }

    fn shape(&self) -> SuiteShape {
        self.shape
    }

    fn sample(&self, seed: u64, dim: usize, ctx: &SampleContext) -> Result<InequalityCase> {
        let dim = if self.shape == SuiteShape::Scalar { 1 } else { dim };
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut s = Sampler::new(self.id, seed, dim, ctx);
        (self.sample)(&mut s)?;
        Ok(s.case)
    }

    fn evaluate(&self, case: &InequalityCase) -> Result<CheckResult> {
        if case.suite_id != self.id {
            return Err(Error::param(format!("case belongs to `{}`, not `{}`", case.suite_id, self.id)));
        }
        if case.operands.iter().any(|m| m.dim() != case.dim) {
            return Err(Error::param("operand dimension differs from case dimension"));
        }
        (self.eval)(case)
    }

    fn equality_case(&self, dim: usize, ctx: &SampleContext) -> Option<InequalityCase> {
        let f = self.equality.as_ref()?;
        let dim = if self.shape == SuiteShape::Scalar { 1 } else { dim.max(1) };
        let mut s = Sampler::new(self.id, EQUALITY_SEED, dim, ctx);
        s.case.params = equality_params();
        f(&mut s).ok()?;
        Some(s.case)
    }

    fn scalar_counterpart(&self, case: &InequalityCase) -> Option<Result<CheckResult>> {
        let f = self.counterpart.as_ref()?;
        if case.dim != 1 {
            return Some(Err(Error::param("scalar counterpart needs a 1x1 case")));
        }
        Some(f(case))
    }

    fn operand_roles(&self) -> &[OperandRole] {
        &self.roles
    }

    fn param_fields(&self) -> &[ParamField] {
        &self.fields
    }

    fn internal(&self) -> bool {
        self.internal
    }
}

fn equality_params() -> WeightParams {
    WeightParams { kappa: 0.3, nu: 0.1, m: 2, r_exp: 1.5, theta: 0.3, mu: 0.5, t: 1.0, power: 0.5, ..Default::default() }.with_p(3.0)
}

use OperandRole::{Cross, Left, Right};
use SuiteShape::{Matrix, Scalar};
use SuiteStatus::{Asserted, Recorded};

const LLL: &[OperandRole] = &[Left];
const LRC: &[OperandRole] = &[Left, Right, Cross];

// ---- case accessors -------------------------------------------------------

fn scalar_pair(case: &InequalityCase) -> Result<ScalarPair> {
    match case.scalars.as_slice() {
        [rho, sigma] => ScalarPair::new(*rho, *sigma),
        _ => Err(Error::param("pair case needs exactly two scalars")),
    }
}

/// Evaluates a pair statement in both orientations.
fn both_orientations(case: &InequalityCase, f: impl Fn(&ScalarPair) -> Result<CheckResult>) -> Result<CheckResult> {
    let pair = scalar_pair(case)?;
    let mut parts = f(&pair)?.parts;
    for mut p in f(&pair.swapped())?.parts {
        p.label.push_str(":swapped");
        parts.push(p);
    }
    Ok(CheckResult::of(parts))
}

fn relabel(r: CheckResult, label: &str) -> CheckResult {
    CheckResult::of(r.parts.into_iter().map(|p| CheckPart { label: label.to_string(), ..p }).collect())
}

fn positives(case: &InequalityCase) -> Result<Vec<PositiveMatrix>> {
    (0..case.operands.len()).map(|k| case.definite(k)).collect()
}

fn mean_inputs(case: &InequalityCase) -> Result<MeanInputs> {
    MeanInputs::new(case.definite(0)?, case.definite(1)?, case.operand(2)?.clone(), case.params.kappa, 0.5, case.params.mu)
}

/// Real entry of a 1×1 operand.
fn real1(case: &InequalityCase, k: usize) -> Result<f64> {
    Ok(case.operand(k)?.get(0, 0).re)
}

fn abs1(case: &InequalityCase, k: usize) -> Result<f64> {
    Ok(case.operand(k)?.get(0, 0).norm())
}

/// The same part for every selector of the case.
fn per_norm(case: &InequalityCase, prefix: &str, lhs: f64, rhs: f64) -> Result<Vec<CheckPart>> {
    Ok(case.norm_list()?.iter().map(|s| CheckPart::le(format!("{prefix}{s}"), lhs, rhs)).collect())
}

// ---- samplers -------------------------------------------------------------

fn sample_tsx(s: &mut Sampler) -> Result<()> {
    s.positive()?;
    s.positive()?;
    s.gaussian();
    s.norms();
    Ok(())
}

fn sample_ts(s: &mut Sampler) -> Result<()> {
    s.positive()?;
    s.positive()
}

fn sample_family(s: &mut Sampler, gammas: bool) -> Result<()> {
    let k = s.count();
    if gammas {
        s.gammas(k)?;
    } else {
        s.dirichlet(k)?;
    }
    for _ in 0..k {
        s.positive()?;
    }
    Ok(())
}

/// `T = S` drawn once, `X = I`.
fn equal_ts_identity_x(s: &mut Sampler) -> Result<()> {
    s.positive()?;
    let t = s.case.operands[0].clone();
    s.case.operands.push(t);
    s.case.operands.push(ComplexMatrix::identity(s.dim()));
    s.norms();
    Ok(())
}

fn identity_ts_random_x(s: &mut Sampler) -> Result<()> {
    let n = s.dim();
    s.case.operands = vec![ComplexMatrix::identity(n), ComplexMatrix::identity(n)];
    s.gaussian();
    s.norms();
    Ok(())
}

fn equal_family(s: &mut Sampler, k: usize) -> Result<()> {
    s.positive()?;
    let t = s.case.operands[0].clone();
    for _ in 1..k {
        s.case.operands.push(t.clone());
    }
    Ok(())
}

fn equal_pair(s: &mut Sampler) -> Result<()> {
    s.case.scalars = vec![2.5, 2.5];
    Ok(())
}

// ---- scalar suites --------------------------------------------------------

fn pair_suite(
    id: &'static str,
    title: &'static str,
    statement: &'static str,
    status: SuiteStatus,
    draw: fn(&mut Sampler),
    check: impl Fn(&ScalarPair, &WeightParams) -> Result<CheckResult> + Send + Sync + 'static,
) -> TableSuite {
    TableSuite::new(
        id,
        title,
        statement,
        status,
        Scalar,
        move |s| {
            s.pair();
            draw(s);
            Ok(())
        },
        move |case| both_orientations(case, |p| check(p, &case.params)),
    )
}

fn no_params(_: &mut Sampler) {}

fn draw_kappa(s: &mut Sampler) {
    s.kappa();
}

fn draw_kappa_nu(s: &mut Sampler) {
    s.kappa_nu();
}

fn scalar_suites() -> Vec<Box<dyn InequalitySuite>> {
    use ParamField::*;
    let mut out = vec![
        pair_suite("S1.young.Y1", "weighted Young inequality", "ρ^κ σ^(1−κ) ≤ κρ + (1−κ)σ", Asserted, draw_kappa, check_young)
            .fields(&[Kappa])
            .equality(equal_pair)
            .boxed(),
        pair_suite("S1.young.Y2", "arithmetic-geometric mean inequality", "√(ρσ) ≤ (ρ+σ)/2", Asserted, no_params, |p, _| check_am_gm(p))
            .equality(equal_pair)
            .boxed(),
        pair_suite(
            "S1.young.Y3",
            "refined Young inequality with powers",
            "(ρ^κ σ^(1−κ))^m + r₀^m (ρ^(m/2) − σ^(m/2))² ≤ (κρ^r + (1−κ)σ^r)^(m/r), r₀ = min{κ, 1−κ}",
            Asserted,
            |s| {
                s.kappa();
                s.m_r();
            },
            check_young_refined,
        )
        .fields(&[Kappa, M, RExp])
        .equality(equal_pair)
        .boxed(),
        pair_suite(
            "S1.heinz.A9",
            "Heinz mean between geometric and arithmetic means",
            "√(ρσ) ≤ H_κ(ρ,σ) ≤ (ρ+σ)/2",
            Asserted,
            |s| s.kappa_gridded(),
            check_heinz_interpolation,
        )
        .fields(&[Kappa])
        .equality(equal_pair)
        .boxed(),
        pair_suite(
            "S1.heron.A20",
            "Heinz mean below a Heron mean",
            "H_κ(ρ,σ) ≤ F_(2κ−1)²(ρ,σ)",
            Asserted,
            draw_kappa,
            |p, w| check_bhatia_heron(p, w.kappa),
        )
        .fields(&[Kappa])
        .equality(equal_pair)
        .boxed(),
    ];
    let kanto: [(&'static str, &'static str, YoungDirection); 5] = [
        ("S1.kantorovich.A5.refine", "K(h)^r ρ♯_κσ ≤ ρ∇_κσ, h = σ/ρ, r = min{κ, 1−κ}", YoungDirection::RefineA5),
        ("S1.kantorovich.A5.reverse", "ρ∇_κσ ≤ K(h)^R ρ♯_κσ, R = max{κ, 1−κ}", YoungDirection::ReverseA5),
        ("S1.kantorovich.A6", "r(√ρ − √σ)² + K(√h)^r′ ρ♯_κσ ≤ ρ∇_κσ, r′ = min{2r, 1−2r}", YoungDirection::RefineA6),
        ("S1.kantorovich.A7", "ρ∇_κσ ≤ K(√h)^(−r′) ρ♯_κσ + R(√ρ − √σ)²", YoungDirection::ReverseA7),
        ("S1.kantorovich.A8", "ρ∇_κσ − R(√ρ − √σ)² ≤ K(√h)^R′ ρ♯_κσ, R′ = max{2r, 1−2r}", YoungDirection::ReverseA8),
    ];
    for (id, statement, dir) in kanto {
        out.push(
            pair_suite(id, "Kantorovich-type Young bound", statement, Asserted, draw_kappa, move |p, w| check_kantorovich_young(p, w, dir))
                .fields(&[Kappa])
                .equality(equal_pair)
                .boxed(),
        );
    }
    let lemmas: [(&'static str, &'static str, LemmaKind, Form); 4] = [
        (
            "S3.lemma.B1",
            "r(√(ρ♯_κσ) − √σ)² + K(√h)^r′ ρ♯_νσ ≤ νρ + (1−ν)σ − (ν/κ)(ρ∇_κσ − ρ♯_κσ), h = ρ/σ",
            LemmaKind::B1,
            Form::PaperStated,
        ),
        (
            "S3.lemma.B3",
            "νρ + (1−ν)σ − (ν/κ)(ρ∇_κσ − ρ♯_κσ) ≤ K(√h)^(−r′) ρ♯_νσ + R(√(ρ♯_κσ) − √σ)², h = ρ/σ",
            LemmaKind::B3,
            Form::PaperStated,
        ),
        (
            "S3.lemma.B1.derived",
            "as S3.lemma.B1 with h = (ρ/σ)^κ",
            LemmaKind::B1,
            Form::DerivedCorrected,
        ),
        (
            "S3.lemma.B3.derived",
            "as S3.lemma.B3 with h = (ρ/σ)^κ",
            LemmaKind::B3,
            Form::DerivedCorrected,
        ),
    ];
    for (id, statement, kind, form) in lemmas {
        let status = if form == Form::PaperStated { Recorded } else { Asserted };
        let mut suite = pair_suite(id, "weighted Kantorovich lemma", statement, status, draw_kappa_nu, move |p, w| {
            check_heinz_scalar_lemmas(p, w, kind, form)
        })
        .fields(&[Kappa, Nu]);
        if status == Asserted {
            suite = suite.equality(equal_pair);
        }
        out.push(suite.boxed());
    }
    let heinz_forms: [(&'static str, &'static str, HeinzKind, Form); 4] = [
        (
            "S3.heinz.A1",
            "r(H_κ + H_0 − H_(κ/2)) + K(√h)^r′ H_ν ≤ H_0 − (ν/κ)(H_0 − H_κ), h = ρ/σ",
            HeinzKind::A1,
            Form::PaperStated,
        ),
        (
            "S3.heinz.A2",
            "H_0 − (ν/κ)(H_0 − H_κ) ≤ K(√h)^(−r′) H_ν + r(H_κ + H_0 − H_(κ/2)), h = ρ/σ",
            HeinzKind::A2,
            Form::PaperStated,
        ),
        (
            "S3.heinz.A1.derived",
            "r(H_κ + H_0 − 2H_(κ/2)) + K(√h)^r′ H_ν ≤ H_0 − (ν/κ)(H_0 − H_κ), h = (ρ/σ)^κ",
            HeinzKind::A1,
            Form::DerivedCorrected,
        ),
        (
            "S3.heinz.A2.derived",
            "H_0 − (ν/κ)(H_0 − H_κ) ≤ K(√h)^(−r′) H_ν + R(H_κ + H_0 − 2H_(κ/2)), h = (ρ/σ)^κ",
            HeinzKind::A2,
            Form::DerivedCorrected,
        ),
    ];
    for (id, statement, which, form) in heinz_forms {
        let status = if form == Form::PaperStated { Recorded } else { Asserted };
        let mut suite = pair_suite(id, "refined Heinz inequality", statement, status, draw_kappa_nu, move |p, w| {
            check_heinz_refined(p, w, form, which)
        })
        .fields(&[Kappa, Nu]);
        if status == Asserted {
            suite = suite.equality(equal_pair);
        }
        out.push(suite.boxed());
    }
    out.push(
        pair_suite(
            "S5.scalar.man1",
            "refined Young inequality with conjugate exponents",
            "(ρ^(1/p) σ^(1/q))^m + r₀^m (ρ^(m/2) − σ^(m/2))² ≤ (ρ^r/p + σ^r/q)^(m/r), r₀ = min{1/p, 1/q}",
            Asserted,
            |s| {
                s.p();
                s.m_r();
            },
            check_man1,
        )
        .fields(&[P, M, RExp])
        .equality(equal_pair)
        .boxed(),
    );
    out.push(
        TableSuite::new(
            "S5.scalar.furu",
            "refined weighted AM-GM inequality",
            "Π ω_k^ϑ_k + r(Σ ω_k − n(Π ω_k)^(1/n)) ≤ Σ ϑ_k ω_k, r = min ϑ_k",
            Asserted,
            Scalar,
            |s| {
                let k = s.count();
                s.dirichlet(k)?;
                s.omegas(k);
                Ok(())
            },
            |case| check_furu(case.weight_vector()?, &case.scalars),
        )
        .equality(|s| {
            s.case.weights = Some(WeightVector::from_weights(vec![0.3, 0.7])?);
            s.case.scalars = vec![2.5, 2.5];
            Ok(())
        })
        .boxed(),
    );
    out.push(
        TableSuite::new(
            "S5.scalar.constrained",
            "constrained product inequality",
            "(Π (ω_k + √(1+ω_k²))^γ_k)^(1/Γ) ≤ a + √(1+a²), a = Σ γ_k ω_k / Γ",
            Asserted,
            Scalar,
            |s| {
                let k = s.count();
                s.gammas(k)?;
                s.omegas(k);
                Ok(())
            },
            |case| check_constrained_scalar(case.weight_vector()?, &case.scalars),
        )
        .equality(|s| {
            s.case.weights = Some(WeightVector::from_gammas(vec![0.5, 1.5])?);
            s.case.scalars = vec![2.5, 2.5];
            Ok(())
        })
        .boxed(),
    );
    out
}

// ---- interpolation suites -------------------------------------------------

/// `|x|` times the scalar interpolants of a 1×1 case.
struct Scalar1 {
    t: f64,
    s: f64,
    x: f64,
    kappa: f64,
}

impl Scalar1 {
    fn of(case: &InequalityCase) -> Result<Self> {
        Ok(Scalar1 { t: real1(case, 0)?, s: real1(case, 1)?, x: abs1(case, 2)?, kappa: case.params.kappa })
    }

    fn a(&self) -> f64 {
        self.x * self.t.powf(self.kappa) * self.s.powf(1.0 - self.kappa)
    }

    fn c(&self) -> f64 {
        self.x * self.t.powf(1.0 - self.kappa) * self.s.powf(self.kappa)
    }

    fn b(&self) -> f64 {
        self.x * (self.t + self.s) * 0.5
    }

    fn psi(&self, th: f64) -> f64 {
        ((1.0 - th) * self.a() + th * self.b()).abs()
    }

    fn phi(&self, th: f64) -> f64 {
        ((1.0 - th / 2.0) * (self.a() + self.c()) + th * self.b()).abs()
    }
}

fn interpolation_suites() -> Vec<Box<dyn InequalitySuite>> {
    use ParamField::*;
    let mut out = vec![
        TableSuite::new(
            "S2.rahma1.psi",
            "monotonicity of the Heron-type interpolant ψ",
            "ψ(ϑ) = |||(1−ϑ)T^κXS^(1−κ) + ϑ(TX+XS)/2|||: ψ(ϑ) ≤ ψ(1/2) on [0,1/2], non-decreasing on [1/2,∞)",
            Asserted,
            Matrix,
            |s| {
                s.kappa();
                sample_tsx(s)
            },
            |case| check_psi_monotone(&mean_inputs(case)?, case.norm_list()?, &case.grids.theta_low, &case.grids.theta_high),
        )
        .roles(LRC)
        .fields(&[Kappa])
        .equality(identity_ts_random_x)
        .counterpart(|case| {
            let v = Scalar1::of(case)?;
            let sels = case.norm_list()?;
            let parts = monotone_parts("psi", |th| Ok(vec![v.psi(th); sels.len()]), sels, &case.grids.theta_low, &case.grids.theta_high)?;
            Ok(CheckResult::of(parts))
        })
        .boxed(),
        TableSuite::new(
            "S2.refund1.phi",
            "monotonicity of the symmetrized interpolant φ",
            "φ(ϑ) = |||(1−ϑ/2)(T^κXS^(1−κ) + T^(1−κ)XS^κ) + ϑ(TX+XS)/2|||: φ(ϑ) ≤ φ(1/2) on [0,1/2], non-decreasing on [1/2,∞)",
            Asserted,
            Matrix,
            |s| {
                s.kappa();
                sample_tsx(s)
            },
            |case| check_phi_monotone(&mean_inputs(case)?, case.norm_list()?, &case.grids.theta_low, &case.grids.theta_high),
        )
        .roles(LRC)
        .fields(&[Kappa])
        .equality(identity_ts_random_x)
        .counterpart(|case| {
            let v = Scalar1::of(case)?;
            let sels = case.norm_list()?;
            let parts = monotone_parts("phi", |th| Ok(vec![v.phi(th); sels.len()]), sels, &case.grids.theta_low, &case.grids.theta_high)?;
            Ok(CheckResult::of(parts))
        })
        .boxed(),
        TableSuite::new(
            "S2.refund2.chain",
            "interpolant chain",
            "|||T^κXS^(1−κ)||| ≤ ½|||T^κXS^(1−κ) + T^(1−κ)XS^κ||| ≤ |||TX + XS + tT^κXS^(1−κ)|||/(t+2)",
            Asserted,
            Matrix,
            |s| {
                s.kappa();
                sample_tsx(s)
            },
            |case| check_chain_refund2(&mean_inputs(case)?, case.norm_list()?, &case.grids.chain_t),
        )
        .roles(LRC)
        .fields(&[Kappa])
        .equality(identity_ts_random_x)
        .counterpart(|case| {
            let v = Scalar1::of(case)?;
            let sels = case.norm_list()?;
            let n = sels.len();
            let parts = chain_parts(sels, &case.grids.chain_t, &vec![v.a(); n], &vec![(v.a() + v.c()) * 0.5; n], |t| {
                Ok(vec![(2.0 * v.b() + t * v.a()).abs(); n])
            })?;
            Ok(CheckResult::of(parts))
        })
        .boxed(),
    ];
    let corollaries: [(&'static str, &'static str, MonotoneFunctionSpec, CorollaryVariant); 4] = [
        (
            "S2.rahma2.sqrt",
            "½|||T^(μ/2)(f(T^μ)Xf*(S^μ) + f*(T^μ)Xf(S^μ))S^(μ/2)||| ≤ ψ(ϑ), f = √, ϑ ≥ 1/2",
            MonotoneFunctionSpec::SQRT,
            CorollaryVariant::Rahma2,
        ),
        (
            "S2.rahma2.log1p",
            "½|||T^(μ/2)(f(T^μ)Xf*(S^μ) + f*(T^μ)Xf(S^μ))S^(μ/2)||| ≤ ψ(ϑ), f = log(1+x), ϑ ≥ 1/2",
            MonotoneFunctionSpec::LOG1P,
            CorollaryVariant::Rahma2,
        ),
        (
            "S2.boshra1.sqrt",
            "η/(2f(η)) |||T^(μ/2)(f(T^μ)X + Xf(S^μ))S^(μ/2)||| ≤ ψ(ϑ), η = min sp(T) ∪ sp(S), f = √",
            MonotoneFunctionSpec::SQRT,
            CorollaryVariant::Boshra1,
        ),
        (
            "S2.boshra1.log1p",
            "η/(2f(η)) |||T^(μ/2)(f(T^μ)X + Xf(S^μ))S^(μ/2)||| ≤ ψ(ϑ), η = min sp(T) ∪ sp(S), f = log(1+x)",
            MonotoneFunctionSpec::LOG1P,
            CorollaryVariant::Boshra1,
        ),
    ];
    for (id, statement, func, variant) in corollaries {
        out.push(
            TableSuite::new(
                id,
                "monotone-function bound by the interpolant ψ",
                statement,
                Asserted,
                Matrix,
                |s| {
                    s.kappa();
                    s.mu();
                    sample_tsx(s)
                },
                move |case| check_corollary_functional_bound(&mean_inputs(case)?, func, variant, case.norm_list()?, &case.grids.theta_high),
            )
            .roles(LRC)
            .fields(&[Kappa, Mu])
            .equality(identity_ts_random_x)
            .counterpart(move |case| {
                let v = Scalar1::of(case)?;
                let mu = case.params.mu;
                let (tm, sm) = (v.t.powf(mu), v.s.powf(mu));
                let outer = v.t.powf(mu / 2.0) * v.s.powf(mu / 2.0) * v.x;
                let lhs = match variant {
                    CorollaryVariant::Rahma2 => 0.5 * outer * (func.eval(tm) * func.star(sm) + func.star(tm) * func.eval(sm)),
                    CorollaryVariant::Boshra1 => {
                        let eta = v.t.min(v.s);
                        eta / (2.0 * func.eval(eta)) * outer * (func.eval(tm) + func.eval(sm))
                    }
                };
                let mut parts = Vec::new();
                for &th in &case.grids.theta_high {
                    parts.extend(per_norm(case, &format!("{}:{}:", func.name, th), lhs, v.psi(th))?);
                }
                Ok(CheckResult::of(parts))
            })
            .boxed(),
        );
    }
    out.push(
        TableSuite::new(
            "S2.hhm1.schur",
            "Schur product norm bound",
            "|||T∘S||| ≤ max_i t_ii · |||S|||, T positive semi-definite",
            Asserted,
            Matrix,
            |s| {
                s.positive()?;
                s.gaussian();
                s.norms();
                Ok(())
            },
            |case| check_schur_norm_bound(&case.semidefinite(0)?, case.operand(1)?, case.norm_list()?),
        )
        .equality(|s| {
            let n = s.dim();
            s.case.operands.push(ComplexMatrix::from_real(n, &vec![1.0; n * n])?);
            s.gaussian();
            s.norms();
            Ok(())
        })
        .counterpart(|case| {
            let (t, x) = (real1(case, 0)?, abs1(case, 1)?);
            Ok(CheckResult::of(per_norm(case, "", t * x, t * x)?))
        })
        .boxed(),
    );
    out.push(
        TableSuite::new(
            "S2.hhm2.psd",
            "positive semi-definite kernel",
            "[(κ_i^r + κ_j^r)/(κ_i² + tκ_iκ_j + κ_j²)] ⪰ 0 for r ∈ [−1,1], t ∈ (−2,2]",
            Asserted,
            Matrix,
            |s| {
                let n = s.dim();
                s.case.scalars = (0..n).map(|_| s.log_uniform(0.1, 10.0)).collect();
                s.case.params.power = s.uniform(-1.0, 1.0);
                s.case.params.t = if s.chance(0.1) { 2.0 } else { 2.0 - 4.0 * s.unit() };
                if s.case.params.t <= -2.0 {
                    s.case.params.t = 2.0;
                }
                Ok(())
            },
            |case| {
                if case.scalars.len() != case.dim {
                    return Err(Error::DimMismatch { left: case.dim, right: case.scalars.len() });
                }
                check_hhm2_psd(&case.scalars, case.params.power, case.params.t)
            },
        )
        .fields(&[Power, T])
        .equality(|s| {
            // one node repeated: the scaled kernel is the all-ones matrix
            s.case.dim = s.case.dim.max(2);
            s.case.scalars = vec![1.7; s.case.dim];
            Ok(())
        })
        .counterpart(|_| Ok(CheckResult::single(CheckPart::le("psd", 0.0, 1.0))))
        .boxed(),
    );
    out
}

// ---- operator suites ------------------------------------------------------

fn operator_suites() -> Vec<Box<dyn InequalitySuite>> {
    use ParamField::*;
    let forms: [(&'static str, &'static str, HeinzKind, Form); 4] = [
        (
            "S4.heinz.O1",
            "r(H_κ + H_0 − H_(κ/2)) + K(√h)^r′ H_ν ⪯ H_0 − (ν/κ)(H_0 − H_κ) for operator Heinz means, h = M/m",
            HeinzKind::A1,
            Form::PaperStated,
        ),
        (
            "S4.heinz.A2op",
            "H_0 − (ν/κ)(H_0 − H_κ) ⪯ K(√h)^(−r′) H_ν + r(H_κ + H_0 − H_(κ/2)) for operator Heinz means, h = M/m",
            HeinzKind::A2,
            Form::PaperStated,
        ),
        (
            "S4.heinz.O1.derived",
            "r(H_κ + H_0 − 2H_(κ/2)) + K(√h)^r′ H_ν ⪯ H_0 − (ν/κ)(H_0 − H_κ), h = x^κ, x the point of the spectral window of T^(−1/2)ST^(−1/2) nearest 1",
            HeinzKind::A1,
            Form::DerivedCorrected,
        ),
        (
            "S4.heinz.A2op.derived",
            "H_0 − (ν/κ)(H_0 − H_κ) ⪯ K(√h)^(−r′) H_ν + R(H_κ + H_0 − 2H_(κ/2)), h as in S4.heinz.O1.derived",
            HeinzKind::A2,
            Form::DerivedCorrected,
        ),
    ];
    let mut out = Vec::new();
    for (id, statement, which, form) in forms {
        let status = if form == Form::PaperStated { Recorded } else { Asserted };
        let mut suite = TableSuite::new(
            id,
            "operator Heinz mean refinement under spectral conditions",
            statement,
            status,
            Matrix,
            |s| {
                s.kappa_nu();
                s.conditioned_pair()
            },
            move |case| {
                let cond = case.condition.ok_or_else(|| Error::param("operator case needs a spectral condition"))?;
                check_operator_heinz(&case.definite(0)?, &case.definite(1)?, &cond, &case.params, which, form)
            },
        )
        .roles(LLL)
        .fields(&[Kappa, Nu])
        .counterpart(move |case| {
            let cond = case.condition.ok_or_else(|| Error::param("operator case needs a spectral condition"))?;
            let (t, s) = (real1(case, 0)?, real1(case, 1)?);
            let p = &case.params;
            let ks = kant(operator_h(&cond, p.kappa, form).sqrt());
            let (lhs, rhs) =
                heinz_refined_sides(heinz(s, t, 0.0), heinz(s, t, p.kappa), heinz(s, t, p.kappa / 2.0), heinz(s, t, p.nu), ks, p, which, form)?;
            let label = if which == HeinzKind::A1 { "o1" } else { "a2op" };
            Ok(CheckResult::single(CheckPart::le(label, lhs, rhs)))
        });
        if status == Asserted {
            suite = suite.equality(|s| {
                let n = s.dim();
                s.case.condition = Some(SpectralCondition::new(1.0, 2.0, 2.0, 4.0, ConditionVariant::B)?);
                let t = ComplexMatrix::identity(n).scale(2.0);
                s.case.operands = vec![t.clone(), t];
                Ok(())
            });
        }
        out.push(suite.boxed());
    }
    out
}

// ---- trace, determinant and norm suites -----------------------------------

fn man1_of(t: f64, s: f64, params: &WeightParams) -> Result<CheckResult> {
    check_man1(&ScalarPair::new(t, s)?, params)
}

fn matrix_young_suites() -> Vec<Box<dyn InequalitySuite>> {
    use ParamField::*;
    let mut out = vec![
        TableSuite::new(
            "S5.ando",
            "singular value Young inequality",
            "s_j(TS) ≤ s_j(T^p/p + S^q/q) for every j",
            Asserted,
            Matrix,
            |s| {
                s.p();
                sample_ts(s)
            },
            |case| check_ando(&case.definite(0)?, &case.definite(1)?, case.params.p, case.params.q),
        )
        .roles(LLL)
        .fields(&[P])
        .equality(|s| {
            let n = s.dim();
            s.case.params = s.case.params.with_p(2.0);
            s.case.operands = vec![ComplexMatrix::identity(n), ComplexMatrix::identity(n)];
            Ok(())
        })
        .counterpart(|case| {
            let (t, s, p) = (real1(case, 0)?, real1(case, 1)?, &case.params);
            let r = check_young(&ScalarPair::new(t.powf(p.p), s.powf(p.q))?, &WeightParams::with_kappa(1.0 / p.p))?;
            Ok(relabel(r, "s1"))
        })
        .boxed(),
        TableSuite::new(
            "S5.trace.man2",
            "refined trace Young inequality",
            "(tr|T^(1/p)S^(1/q)|)^m + r₀^m((tr T)^(m/2) − (tr S)^(m/2))² ≤ (tr(T^r)/p + tr(S^r)/q)^(m/r), with its trace-norm restatement",
            Recorded,
            Matrix,
            |s| {
                s.p();
                s.m_r();
                sample_ts(s)
            },
            |case| check_trace_young(&case.definite(0)?, &case.definite(1)?, &case.params),
        )
        .roles(LLL)
        .fields(&[P, M, RExp])
        .counterpart(|case| {
            let r = man1_of(real1(case, 0)?, real1(case, 1)?, &case.params)?;
            let part = &r.parts[0];
            Ok(CheckResult::of(vec![CheckPart { label: "man2".into(), ..part.clone() }, CheckPart { label: "rashid1".into(), ..part.clone() }]))
        })
        .boxed(),
    ];
    let det_forms: [(&'static str, &'static str, DetForm); 2] = [
        (
            "S5.det.rashidq1",
            "det(T^(1/p)S^(1/q))^m + r₀^(mn) det(T^m + S^m − 2S^(m/2)(S^(−1/2)TS^(−1/2))^m S^(m/2))² ≤ det(T^r/p + S^r/q)^(m/r)",
            DetForm::Printed,
        ),
        (
            "S5.det.rashidq1.proof",
            "det(T^(1/p)S^(1/q))^m + r₀^(mn) det(S)^m det((S^(−1/2)TS^(−1/2))^(m/2) − I)² ≤ det(T^r/p + S^r/q)^(m/r)",
            DetForm::Proof,
        ),
    ];
    for (id, statement, form) in det_forms {
        out.push(
            TableSuite::new(
                id,
                "refined determinant Young inequality",
                statement,
                Recorded,
                Matrix,
                |s| {
                    s.p();
                    s.m_r();
                    sample_ts(s)
                },
                move |case| check_det_young(&case.definite(0)?, &case.definite(1)?, &case.params, form),
            )
            .roles(LLL)
            .fields(&[P, M, RExp])
            .counterpart(move |case| {
                let (t, s, p) = (real1(case, 0)?, real1(case, 1)?, &case.params);
                match form {
                    DetForm::Proof => Ok(relabel(man1_of(t, s, p)?, "rashidq1")),
                    DetForm::Printed => {
                        let m = p.m as i32;
                        let lhs = (t.powf(1.0 / p.p) * s.powf(1.0 / p.q)).powi(m) + p.r0().powi(m) * (s.powi(m) - t.powi(m)).powi(2);
                        let rhs = (t.powf(p.r_exp) / p.p + s.powf(p.r_exp) / p.q).powf(p.m as f64 / p.r_exp);
                        Ok(CheckResult::single(CheckPart::le("rashidq1", lhs, rhs)))
                    }
                }
            })
            .boxed(),
        );
    }
    let readings: [(&'static str, &'static str, NormReading, SuiteStatus); 2] = [
        (
            "S5.norm.ghadeer11",
            "|||T^(1/p)XS^(1/q)|||^m + r₀^m(|||TX|||^(m/2) − |||SX|||^(m/2))² ≤ ((1/p)|||TX|||^r + (1/q)|||XS|||^r)^(m/r), with the Heinz–Kato bound at ϑ = 1/p",
            NormReading::Printed,
            Recorded,
        ),
        (
            "S5.norm.ghadeer11.xs",
            "|||T^(1/p)XS^(1/q)|||^m + r₀^m(|||TX|||^(m/2) − |||XS|||^(m/2))² ≤ ((1/p)|||TX|||^r + (1/q)|||XS|||^r)^(m/r), with the Heinz–Kato bound at ϑ = 1/p",
            NormReading::Consistent,
            Asserted,
        ),
    ];
    for (id, statement, reading, status) in readings {
        let mut suite = TableSuite::new(
            id,
            "refined Young inequality for unitarily invariant norms",
            statement,
            status,
            Matrix,
            |s| {
                s.p();
                s.m_r();
                sample_tsx(s)
            },
            move |case| check_uinorm_young(&case.definite(0)?, &case.definite(1)?, case.operand(2)?, &case.params, case.norm_list()?, reading),
        )
        .roles(if reading == NormReading::Printed { LLL } else { LRC })
        .fields(&[P, M, RExp])
        .counterpart(|case| {
            let (t, s, x, p) = (real1(case, 0)?, real1(case, 1)?, abs1(case, 2)?, &case.params);
            let (a, b) = (t * x, x * s);
            let young = man1_of(a, b, p)?;
            let mut parts = Vec::new();
            for sel in case.norm_list()? {
                parts.push(CheckPart::le(format!("heinz_kato:{sel}"), x * sharp(t, s, 1.0 / p.p), a.powf(1.0 / p.p) * b.powf(1.0 / p.q)));
                parts.push(CheckPart { label: format!("young:{sel}"), ..young.parts[0].clone() });
            }
            Ok(CheckResult::of(parts))
        });
        if status == Asserted {
            suite = suite.equality(|s| {
                s.case.params = WeightParams { m: 1, r_exp: 1.0, ..s.case.params }.with_p(2.0);
                equal_ts_identity_x(s)
            });
        }
        out.push(suite.boxed());
    }
    out.push(
        TableSuite::new(
            "S5.norm.heinz_kato",
            "Heinz–Kato inequality for unitarily invariant norms",
            "|||T^ϑXS^(1−ϑ)||| ≤ |||TX|||^ϑ |||XS|||^(1−ϑ)",
            Asserted,
            Matrix,
            |s| {
                s.theta();
                sample_tsx(s)
            },
            |case| check_heinz_kato_norm(&case.definite(0)?, &case.definite(1)?, case.operand(2)?, case.params.theta, case.norm_list()?),
        )
        .roles(LRC)
        .fields(&[Theta])
        .equality(equal_ts_identity_x)
        .counterpart(|case| {
            let (t, s, x, th) = (real1(case, 0)?, real1(case, 1)?, abs1(case, 2)?, case.params.theta);
            Ok(CheckResult::of(per_norm(case, "", x * sharp(t, s, th), (t * x).powf(th) * (x * s).powf(1.0 - th))?))
        })
        .boxed(),
    );
    out.push(
        TableSuite::new(
            "S5.trace.heinz_kato",
            "Heinz–Kato inequality in trace norm",
            "tr|T^ϑS^(1−ϑ)| ≤ (tr T)^ϑ (tr S)^(1−ϑ)",
            Asserted,
            Matrix,
            |s| {
                s.theta();
                sample_ts(s)
            },
            |case| check_heinz_kato_trace(&case.definite(0)?, &case.definite(1)?, case.params.theta),
        )
        .roles(LLL)
        .fields(&[Theta])
        .equality(|s| equal_family(s, 2))
        .counterpart(|case| {
            let (t, s, th) = (real1(case, 0)?, real1(case, 1)?, case.params.theta);
            Ok(CheckResult::single(CheckPart::le("trace", sharp(t, s, th), t.powf(th) * s.powf(1.0 - th))))
        })
        .boxed(),
    );
    out
}

fn family_suites() -> Vec<Box<dyn InequalitySuite>> {
    let furu_of = |case: &InequalityCase| -> Result<CheckResult> {
        let omegas: Vec<f64> = (0..case.operands.len()).map(|k| real1(case, k)).collect::<Result<_>>()?;
        check_furu(case.weight_vector()?, &omegas)
    };
    let mut out = vec![TableSuite::new(
        "S5.trace.rashid2",
        "refined weighted AM-GM inequality for traces",
        "tr|Π T_k^ϑ_k| + r(Σ tr T_k − k(Π tr T_k)^(1/k)) ≤ Σ ϑ_k tr T_k, with its trace-norm restatement",
        Asserted,
        Matrix,
        |s| sample_family(s, false),
        |case| check_multi_trace(&positives(case)?, case.weight_vector()?),
    )
    .roles(LLL)
    .equality(|s| {
        s.case.weights = Some(WeightVector::from_weights(vec![0.3, 0.7])?);
        equal_family(s, 2)
    })
    .counterpart(move |case| {
        let part = furu_of(case)?.parts[0].clone();
        Ok(CheckResult::of(vec![CheckPart { label: "trace1".into(), ..part.clone() }, CheckPart { label: "tracethree".into(), ..part }]))
    })
    .boxed()];
    let coeffs: [(&'static str, &'static str, DetCoeff); 2] = [
        (
            "S5.det.deter1",
            "Π det(T_k)^ϑ_k + r(det(Σ T_k) − k(Π det T_k)^(1/k)) ≤ det(Σ ϑ_k T_k), with the Minkowski bound",
            DetCoeff::R,
        ),
        (
            "S5.det.deter1.rn",
            "Π det(T_k)^ϑ_k + r^n(det(Σ T_k) − k(Π det T_k)^(1/k)) ≤ det(Σ ϑ_k T_k), n the dimension",
            DetCoeff::RPowN,
        ),
    ];
    for (id, statement, coeff) in coeffs {
        out.push(
            TableSuite::new(
                id,
                "refined weighted AM-GM inequality for determinants",
                statement,
                Recorded,
                Matrix,
                |s| sample_family(s, false),
                move |case| check_multi_det(&positives(case)?, case.weight_vector()?, coeff),
            )
            .roles(LLL)
            .counterpart(move |case| {
                let mut parts = relabel(furu_of(case)?, "deter1").parts;
                if case.operands.len() >= 2 {
                    let sum = real1(case, 0)? + real1(case, 1)?;
                    parts.push(CheckPart::le("minkowski", sum, sum));
                }
                Ok(CheckResult::of(parts))
            })
            .boxed(),
        );
    }
    out.push(
        TableSuite::new(
            "S5.det.minkowski",
            "Minkowski determinant inequality",
            "det(T)^(1/n) + det(S)^(1/n) ≤ det(T+S)^(1/n)",
            Asserted,
            Matrix,
            sample_ts,
            |case| check_minkowski(&case.definite(0)?, &case.definite(1)?),
        )
        .roles(LLL)
        .equality(|s| equal_family(s, 2))
        .counterpart(|case| {
            let (t, s) = (real1(case, 0)?, real1(case, 1)?);
            Ok(CheckResult::single(CheckPart::le("minkowski", t + s, t + s)))
        })
        .boxed(),
    );
    let const_forms: [(&'static str, &'static str, ConstForm); 2] = [
        (
            "S5.trace.const1",
            "Π (tr T_k + √(1 + tr T_k²))^(1/Γ) ≤ a + √(1+a²), a = Σ tr T_k / Γ",
            ConstForm::Printed,
        ),
        (
            "S5.trace.const1.proof",
            "Π (tr T_k + √(1 + tr T_k²))^(γ_k/Γ) ≤ a + √(1+a²), a = Σ γ_k tr T_k / Γ",
            ConstForm::Proof,
        ),
    ];
    for (id, statement, form) in const_forms {
        out.push(
            TableSuite::new(
                id,
                "constrained trace inequality",
                statement,
                Recorded,
                Matrix,
                |s| sample_family(s, true),
                move |case| check_constrained_trace(&positives(case)?, case.weight_vector()?, form),
            )
            .roles(LLL)
            .counterpart(move |case| {
                let w = case.weight_vector()?;
                let omegas: Vec<f64> = (0..case.operands.len()).map(|k| real1(case, k)).collect::<Result<_>>()?;
                match form {
                    ConstForm::Proof => Ok(relabel(check_constrained_scalar(w, &omegas)?, "const1")),
                    ConstForm::Printed => {
                        let g = w.gamma_total;
                        let a = omegas.iter().sum::<f64>() / g;
                        let lhs: f64 = omegas.iter().map(|t| (t + (1.0 + t * t).sqrt()).powf(1.0 / g)).product();
                        Ok(CheckResult::single(CheckPart::le("const1", lhs, a + (1.0 + a * a).sqrt())))
                    }
                }
            })
            .boxed(),
        );
    }
    out
}

/// A deliberately false statement used to exercise shrinking end to end.
fn self_test() -> Box<dyn InequalitySuite> {
    TableSuite::new(
        "S0.selftest",
        "self-test: a false reversed mean inequality",
        "tr((T+S)/2) ≤ tr(T♯S)",
        Asserted,
        Matrix,
        sample_ts,
        |case| {
            let (t, s) = (case.definite(0)?, case.definite(1)?);
            let am = t.matrix().try_add(s.matrix())?.trace().re * 0.5;
            let gm = GeometricPencil::new(&t, &s)?.sharp(0.5)?.matrix().trace().re;
            Ok(CheckResult::single(CheckPart::le("selftest", am, gm)))
        },
    )
    .roles(LLL)
    .equality(|s| equal_family(s, 2))
    .counterpart(|case| {
        let (t, s) = (real1(case, 0)?, real1(case, 1)?);
        Ok(CheckResult::single(CheckPart::le("selftest", (t + s) * 0.5, (t * s).sqrt())))
    })
    .internal()
    .boxed()
}

pub(super) fn all() -> Vec<Box<dyn InequalitySuite>> {
    let mut out = vec![self_test()];
    out.extend(scalar_suites());
    out.extend(interpolation_suites());
    out.extend(operator_suites());
    out.extend(matrix_young_suites());
    out.extend(family_suites());
    out
}
