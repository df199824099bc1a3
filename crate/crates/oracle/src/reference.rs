//! Reference values of both sides of each evaluated inequality.

use crate::dd::Dd;

use crate::matrix::{eigh, pow, Mat, Norm};

#[derive(Clone, Debug)]
pub struct RefPart {
    pub label: String,
    pub lhs: Dd,
    pub rhs: Dd,
    /// `rhs − lhs`, or `λ_min(rhs − lhs)` for an order statement.
    pub slack: Dd,
}

impl RefPart {
    pub fn le(label: impl Into<String>, lhs: Dd, rhs: Dd) -> Self {
        RefPart { label: label.into(), lhs, rhs, slack: rhs - lhs }
    }

    /// Löwner `lhs ⪯ rhs`; the sides are reported as their eigenvalue of largest modulus.
    pub fn loewner(label: impl Into<String>, lhs: &Mat, rhs: &Mat) -> Self {
        RefPart { label: label.into(), lhs: extreme(lhs), rhs: extreme(rhs), slack: eigh(&rhs.sub(lhs)).min() }
    }
}

fn extreme(m: &Mat) -> Dd {
    let e = eigh(m);
    if e.max().abs() >= e.min().abs() {
        e.max()
    } else {
        e.min()
    }
}

fn d(x: f64) -> Dd {
    Dd::from(x)
}

fn one() -> Dd {
    d(1.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    /// As printed.
    Printed,
    /// As the derivation yields.
    Derived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeinzKind {
    A1,
    A2,
}

/// `a^κ b^{1−κ}`.
pub fn sharp(a: Dd, b: Dd, k: Dd) -> Dd {
    pow(a, k) * pow(b, one() - k)
}

pub fn heinz(a: Dd, b: Dd, k: Dd) -> Dd {
    (sharp(a, b, k) + sharp(a, b, one() - k)) / 2.0
}

/// `(t + 1)² / (4t)`.
pub fn kantorovich(t: Dd) -> Dd {
    (t + 1.0) * (t + 1.0) / (t * 4.0)
}

struct Weights {
    lambda: Dd,
    r: Dd,
    big_r: Dd,
    r1: Dd,
}

fn weights(kappa: f64, nu: f64) -> Weights {
    let lambda = d(nu) / d(kappa);
    let (r, big_r) = if lambda <= one() - lambda { (lambda, one() - lambda) } else { (one() - lambda, lambda) };
    let r1 = if r * 2.0 <= one() - r * 2.0 { r * 2.0 } else { one() - r * 2.0 };
    Weights { lambda, r, big_r, r1 }
}

/// Scalar weighted Kantorovich lemmas; `upper` selects the reverse inequality.
pub fn lemma_b(rho: f64, sigma: f64, kappa: f64, nu: f64, upper: bool, reading: Reading) -> RefPart {
    let (a, b, k, n) = (d(rho), d(sigma), d(kappa), d(nu));
    let w = weights(kappa, nu);
    let h = match reading {
        Reading::Printed => a / b,
        Reading::Derived => pow(a / b, k),
    };
    let ks = kantorovich(h.sqrt());
    let gk = sharp(a, b, k);
    let gn = sharp(a, b, n);
    let sq = (gk.sqrt() - b.sqrt()) * (gk.sqrt() - b.sqrt());
    let mid = n * a + (one() - n) * b - n / k * (k * a + (one() - k) * b - gk);
    if upper {
        RefPart::le("b3", mid, pow(ks, -w.r1) * gn + w.big_r * sq)
    } else {
        RefPart::le("b1", w.r * sq + pow(ks, w.r1) * gn, mid)
    }
}

/// Sides of the refined Heinz inequalities over any ring of "means": scalars or matrices.
trait MeanAlgebra: Clone {
    fn lin(&self, a: Dd, other: &Self, b: Dd) -> Self;
    fn times(&self, c: Dd) -> Self;
}

impl MeanAlgebra for Dd {
    fn lin(&self, a: Dd, other: &Self, b: Dd) -> Self {
        *self * a + *other * b
    }
    fn times(&self, c: Dd) -> Self {
        *self * c
    }
}

impl MeanAlgebra for Mat {
    fn lin(&self, a: Dd, other: &Self, b: Dd) -> Self {
        self.scale(a).add(&other.scale(b))
    }
    fn times(&self, c: Dd) -> Self {
        self.scale(c)
    }
}

/// `[h0, hk, hk2, hn]` are the Heinz means at `0, κ, κ/2, ν`.
fn heinz_sides<T: MeanAlgebra>(h: [T; 4], ks: Dd, kappa: f64, nu: f64, kind: HeinzKind, reading: Reading) -> (T, T) {
    let [h0, hk, hk2, hn] = h;
    let w = weights(kappa, nu);
    let c = match reading {
        Reading::Printed => one(),
        Reading::Derived => d(2.0),
    };
    let bracket = hk.lin(one(), &h0, one()).lin(one(), &hk2, -c);
    let mid = h0.lin(one() - w.lambda, &hk, w.lambda);
    match kind {
        HeinzKind::A1 => (bracket.times(w.r).lin(one(), &hn, pow(ks, w.r1)), mid),
        HeinzKind::A2 => {
            let coeff = match reading {
                Reading::Printed => w.r,
                Reading::Derived => w.big_r,
            };
            (mid, hn.times(pow(ks, -w.r1)).lin(one(), &bracket, coeff))
        }
    }
}

fn heinz_label(kind: HeinzKind, operator: bool) -> &'static str {
    match (kind, operator) {
        (HeinzKind::A1, false) => "a1",
        (HeinzKind::A2, false) => "a2",
        (HeinzKind::A1, true) => "o1",
        (HeinzKind::A2, true) => "a2op",
    }
}

pub fn heinz_scalar(rho: f64, sigma: f64, kappa: f64, nu: f64, kind: HeinzKind, reading: Reading) -> RefPart {
    let (a, b, k) = (d(rho), d(sigma), d(kappa));
    let h = match reading {
        Reading::Printed => a / b,
        Reading::Derived => pow(a / b, k),
    };
    let means = [heinz(a, b, d(0.0)), heinz(a, b, k), heinz(a, b, k / 2.0), heinz(a, b, d(nu))];
    let (lhs, rhs) = heinz_sides(means, kantorovich(h.sqrt()), kappa, nu, kind, reading);
    RefPart::le(heinz_label(kind, false), lhs, rhs)
}

/// Spectral side condition on an operand pair.
#[derive(Clone, Copy, Debug)]
pub struct Condition {
    pub m: f64,
    pub m_prime: f64,
    pub big_m_prime: f64,
    pub big_m: f64,
    /// `false`: T in [m, m′], S in [M′, M]. `true`: T in [m′, M], S in [m, m′].
    pub variant_b: bool,
}

/// `T♯_κS = T^{1/2}(T^{−1/2}ST^{−1/2})^κ T^{1/2}`.
pub struct Pencil {
    half: Mat,
    x: Mat,
}

impl Pencil {
    pub fn new(t: &Mat, s: &Mat) -> Self {
        let half = t.power(d(0.5));
        let inv = t.power(d(-0.5));
        Pencil { half, x: inv.mul(s).mul(&inv).hermitian_part() }
    }

    pub fn sharp(&self, k: Dd) -> Mat {
        self.half.mul(&self.x.power(k)).mul(&self.half).hermitian_part()
    }

    pub fn heinz(&self, k: Dd) -> Mat {
        self.sharp(k).add(&self.sharp(one() - k)).scale(d(0.5))
    }
}

pub fn heinz_operator(t: &Mat, s: &Mat, cond: Condition, kappa: f64, nu: f64, kind: HeinzKind, reading: Reading) -> RefPart {
    let k = d(kappa);
    let h = match reading {
        Reading::Printed => d(cond.big_m) / d(cond.m),
        Reading::Derived => {
            let (lo, hi) = if cond.variant_b {
                (d(cond.m) / d(cond.big_m), one())
            } else {
                (d(cond.big_m_prime) / d(cond.m_prime), d(cond.big_m) / d(cond.m))
            };
            let x = if one() < lo { lo } else if one() > hi { hi } else { one() };
            pow(x, k)
        }
    };
    let p = Pencil::new(t, s);
    let means = [p.heinz(d(0.0)), p.heinz(k), p.heinz(k / 2.0), p.heinz(d(nu))];
    let (lhs, rhs) = heinz_sides(means, kantorovich(h.sqrt()), kappa, nu, kind, reading);
    RefPart::loewner(heinz_label(kind, true), &lhs, &rhs)
}

/// Conjugate exponents and the refinement parameters shared by the Young-type statements.
#[derive(Clone, Copy, Debug)]
pub struct YoungParams {
    pub p: f64,
    pub q: f64,
    pub m: u32,
    pub r: f64,
}

impl YoungParams {
    fn r0(&self) -> Dd {
        let (a, b) = (one() / d(self.p), one() / d(self.q));
        if a <= b {
            a
        } else {
            b
        }
    }
}

fn trace_norm(m: &Mat) -> Dd {
    Norm::Schatten(1.0).eval(m)
}

fn young_sum(t: &Mat, s: &Mat, y: &YoungParams) -> Mat {
    t.power(d(y.r)).scale(one() / d(y.p)).add(&s.power(d(y.r)).scale(one() / d(y.q)))
}

/// Trace and trace-norm forms of the refined matrix Young inequality.
pub fn trace_young(t: &Mat, s: &Mat, y: YoungParams) -> Vec<RefPart> {
    let m = d(y.m as f64);
    let mi = y.m as i32;
    let half = m / 2.0;
    let tn = trace_norm(&t.power(one() / d(y.p)).mul(&s.power(one() / d(y.q))));
    let head = tn.powi(mi);
    let r0m = y.r0().powi(mi);

    let gap = pow(t.trace(), half) - pow(s.trace(), half);
    let rhs = pow(t.power(d(y.r)).trace() / d(y.p) + s.power(d(y.r)).trace() / d(y.q), m / d(y.r));
    let man2 = RefPart::le("man2", head + r0m * gap * gap, rhs);

    let gap = pow(trace_norm(t), half) - pow(trace_norm(s), half);
    let rhs = pow(trace_norm(&young_sum(t, s, &y)), m / d(y.r));
    let rashid1 = RefPart::le("rashid1", head + r0m * gap * gap, rhs);
    vec![man2, rashid1]
}

/// Determinant form; `proof` selects `det(S)^m det(Y^{m/2} − I)²` for the second term.
pub fn det_young(t: &Mat, s: &Mat, y: YoungParams, proof: bool) -> RefPart {
    let n = t.n as i32;
    let mi = y.m as i32;
    let m = d(y.m as f64);
    let lead = (t.power(one() / d(y.p)).det_h() * s.power(one() / d(y.q)).det_h()).powi(mi);
    let s_inv_half = s.power(d(-0.5));
    let yy = s_inv_half.mul(t).mul(&s_inv_half).hermitian_part();
    let second = if proof {
        let dm = yy.power(m / 2.0).sub(&Mat::identity(t.n));
        s.det_h().powi(mi) * dm.det_h().powi(2)
    } else {
        let sh = s.power(m / 2.0);
        let inner = sh.mul(&yy.power(m)).mul(&sh);
        let z = t.power(m).add(&s.power(m)).sub(&inner.scale(d(2.0)));
        z.det_h().powi(2)
    };
    let lhs = lead + y.r0().powi(mi * n) * second;
    RefPart::le("rashidq1", lhs, pow(young_sum(t, s, &y).det_h(), m / d(y.r)))
}

/// Heinz–Kato bound at `ϑ = 1/p` and the refined norm Young inequality, per norm.
/// `sx` reads the refinement term with `|||SX|||` instead of `|||XS|||`.
pub fn uinorm_young(t: &Mat, s: &Mat, x: &Mat, y: YoungParams, norms: &[Norm], sx: bool) -> Vec<RefPart> {
    let mi = y.m as i32;
    let m = d(y.m as f64);
    let (a, b) = (one() / d(y.p), one() / d(y.q));
    let mid_m = t.power(a).mul(x).mul(&s.power(b));
    let (tx_m, xs_m, sx_m) = (t.mul(x), x.mul(s), s.mul(x));
    let mut out = Vec::new();
    for &nrm in norms {
        let mid = nrm.eval(&mid_m);
        let tx = nrm.eval(&tx_m);
        let xs = nrm.eval(&xs_m);
        let w = if sx { nrm.eval(&sx_m) } else { xs };
        out.push(RefPart::le(format!("heinz_kato:{nrm}"), mid, pow(tx, a) * pow(xs, b)));
        let gap = pow(tx, m / 2.0) - pow(w, m / 2.0);
        let lhs = mid.powi(mi) + y.r0().powi(mi) * gap * gap;
        let rhs = pow(a * pow(tx, d(y.r)) + b * pow(xs, d(y.r)), m / d(y.r));
        out.push(RefPart::le(format!("young:{nrm}"), lhs, rhs));
    }
    out
}

fn normalized(gammas: &[f64]) -> Vec<Dd> {
    let total = gammas.iter().fold(d(0.0), |acc, &g| acc + g);
    gammas.iter().map(|&g| d(g) / total).collect()
}

fn sum(ts: &[Mat], c: &[Dd]) -> Mat {
    ts.iter().zip(c).fold(Mat::zeros(ts[0].n), |acc, (t, &w)| acc.add(&t.scale(w)))
}

/// Determinant AM–GM refinement with coefficient `r = min ϑ_k`, or `r^n` when `r_pow_n`,
/// followed by the Minkowski bound for the first two matrices.
pub fn multi_det(ts: &[Mat], gammas: &[f64], r_pow_n: bool) -> Vec<RefPart> {
    let w = normalized(gammas);
    let k = d(ts.len() as f64);
    let r = w.iter().copied().fold(one(), |a, x| if x < a { x } else { a });
    let c = if r_pow_n { r.powi(ts[0].n as i32) } else { r };
    let dets: Vec<Dd> = ts.iter().map(Mat::det_h).collect();
    let head = dets.iter().zip(&w).fold(one(), |acc, (&dt, &th)| acc * pow(dt, th));
    let geo = pow(dets.iter().fold(one(), |acc, &x| acc * x), one() / k);
    let lhs = head + c * (sum(ts, &vec![one(); ts.len()]).det_h() - k * geo);
    let mut out = vec![RefPart::le("deter1", lhs, sum(ts, &w).det_h())];
    if ts.len() >= 2 {
        out.push(minkowski(&ts[0], &ts[1]));
    }
    out
}

pub fn minkowski(t: &Mat, s: &Mat) -> RefPart {
    let e = one() / d(t.n as f64);
    RefPart::le("minkowski", pow(t.det_h(), e) + pow(s.det_h(), e), pow(t.add(s).det_h(), e))
}

/// Constrained trace inequality; `proof` uses the `γ_k`-weighted mean and exponents.
pub fn const_trace(ts: &[Mat], gammas: &[f64], proof: bool) -> RefPart {
    let g = gammas.iter().fold(d(0.0), |acc, &x| acc + x);
    let tr: Vec<Dd> = ts.iter().map(Mat::trace).collect();
    let tr2: Vec<Dd> = ts.iter().map(|t| t.mul(t).trace()).collect();
    let (a, expo): (Dd, Vec<Dd>) = if proof {
        (tr.iter().zip(gammas).fold(d(0.0), |acc, (&t, &c)| acc + t * c) / g, gammas.iter().map(|&c| d(c) / g).collect())
    } else {
        (tr.iter().fold(d(0.0), |acc, &t| acc + t) / g, vec![one() / g; ts.len()])
    };
    let lhs = tr.iter().zip(&tr2).zip(&expo).fold(one(), |acc, ((&t, &t2), &e)| acc * pow(t + (one() + t2).sqrt(), e));
    RefPart::le("const1", lhs, a + (one() + a * a).sqrt())
}

/// The five Kantorovich-type Young statements with `h = σ/ρ`, in the order
/// refine A5, reverse A5, refine A6, reverse A7, reverse A8.
pub fn kantorovich_young(rho: f64, sigma: f64, kappa: f64) -> Vec<RefPart> {
    let (a, b, k) = (d(rho), d(sigma), d(kappa));
    let (r, big_r) = if k <= one() - k { (k, one() - k) } else { (one() - k, k) };
    let (r1, big_r1) = if r * 2.0 <= one() - r * 2.0 { (r * 2.0, one() - r * 2.0) } else { (one() - r * 2.0, r * 2.0) };
    let h = b / a;
    let g = sharp(a, b, k);
    let ar = k * a + (one() - k) * b;
    let sq = (a.sqrt() - b.sqrt()) * (a.sqrt() - b.sqrt());
    let ks = kantorovich(h.sqrt());
    vec![
        RefPart::le("refine_a5", pow(kantorovich(h), r) * g, ar),
        RefPart::le("reverse_a5", ar, pow(kantorovich(h), big_r) * g),
        RefPart::le("refine_a6", r * sq + pow(ks, r1) * g, ar),
        RefPart::le("reverse_a7", ar, pow(ks, -r1) * g + big_r * sq),
        RefPart::le("reverse_a8", ar - big_r * sq, pow(ks, big_r1) * g),
    ]
}

/// `(ρ^{1/p}σ^{1/q})^m + r₀^m(ρ^{m/2} − σ^{m/2})² ≤ (ρ^r/p + σ^r/q)^{m/r}`.
pub fn man1(rho: f64, sigma: f64, y: YoungParams) -> RefPart {
    let (a, b) = (d(rho), d(sigma));
    let m = d(y.m as f64);
    let mi = y.m as i32;
    let gap = pow(a, m / 2.0) - pow(b, m / 2.0);
    let lhs = (pow(a, one() / d(y.p)) * pow(b, one() / d(y.q))).powi(mi) + y.r0().powi(mi) * gap * gap;
    let rhs = pow(pow(a, d(y.r)) / d(y.p) + pow(b, d(y.r)) / d(y.q), m / d(y.r));
    RefPart::le("man1", lhs, rhs)
}
