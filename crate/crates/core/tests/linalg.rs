use heinzlab::harness::{gen_gaussian, gen_positive, gen_unitary};
use heinzlab::linalg::*;
use heinzlab::Error;
use heinzlab_oracle as oracle;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_hermitian(dim: usize, seed: u64) -> HermitianMatrix {
    HermitianMatrix::from_hermitian_part(&gen_gaussian(dim, &mut rng(seed)))
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1f64.max(a.abs()).max(b.abs())
}

fn to_oracle(m: &ComplexMatrix) -> oracle::Mat {
    let e: Vec<(f64, f64)> = m.entries().iter().map(|z| (z.re, z.im)).collect();
    oracle::Mat::from_entries(m.dim(), &e)
}

/// Number of eigenvalues below `x`, from the signs of the LDL* pivots of `A − xI`.
fn count_below(a: &ComplexMatrix, x: f64) -> usize {
    let n = a.dim();
    let mut l = vec![vec![C64::new(0.0, 0.0); n]; n];
    let mut d = vec![0.0; n];
    for j in 0..n {
        let mut dj = a.get(j, j).re - x;
        for k in 0..j {
            dj -= l[j][k].norm_sqr() * d[k];
        }
        if dj == 0.0 {
            dj = -f64::EPSILON * (1.0 + x.abs());
        }
        d[j] = dj;
        for i in j + 1..n {
            let mut v = a.get(i, j);
            for k in 0..j {
                v -= l[i][k] * d[k] * l[j][k].conj();
            }
            l[i][j] = v / dj;
        }
    }
    d.iter().filter(|&&v| v < 0.0).count()
}

/// Eigenvalues by bisection on the inertia count, non-increasing.
fn bisection_eigenvalues(a: &ComplexMatrix) -> Vec<f64> {
    let n = a.dim();
    let bound = a.frobenius_norm() + 1.0;
    let mut out: Vec<f64> = (0..n)
        .map(|k| {
            let (mut lo, mut hi) = (-bound, bound);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if count_below(a, mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect();
    out.reverse();
    out
}

fn cofactor_det3(a: &ComplexMatrix) -> C64 {
    let g = |i, j| a.get(i, j);
    g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)) - g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0))
        + g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0))
}

#[test]
fn eig_identity_and_diagonal() {
    let e = eig_hermitian(&HermitianMatrix::identity(3)).unwrap();
    assert_eq!(e.values, vec![1.0; 3]);
    assert!(e.unitarity_defect() < 1e-14);
    let d = HermitianMatrix::new(ComplexMatrix::from_real_diag(&[2.0, 5.0])).unwrap();
    assert_eq!(eig_hermitian(&d).unwrap().values, vec![5.0, 2.0]);
}

#[test]
fn eig_matches_bisection_on_random_4x4() {
    for seed in 0..20 {
        let a = random_hermitian(4, seed);
        let got = eig_hermitian(&a).unwrap().values;
        let want = bisection_eigenvalues(a.matrix());
        for (g, w) in got.iter().zip(&want) {
            assert!(rel(*g, *w) < 1e-12, "seed {seed}: {got:?} vs {want:?}");
        }
    }
}

#[test]
fn eig_matches_double_double_oracle() {
    for seed in 0..20 {
        let a = random_hermitian(1 + seed as usize % 6, 100 + seed);
        let got = eig_hermitian(&a).unwrap().values;
        let mut want: Vec<f64> = oracle::eigh(&to_oracle(a.matrix())).values.iter().map(|&v| oracle::to_f64(v)).collect();
        want.reverse();
        let scale = want.iter().fold(1f64, |m, v| m.max(v.abs()));
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).abs() <= 1e-13 * scale, "seed {seed}: {got:?} vs {want:?}");
        }
    }
}

#[test]
fn spectral_function_examples() {
    let mut r = rng(1);
    let a = gen_positive(4, 0.1, 10.0, &mut r).unwrap();
    let same = apply_spectral_function(&a, |x| x).unwrap();
    assert!(same.matrix().max_abs_diff(a.matrix()) < 1e-12);
    let d = PositiveMatrix::diagonal(&[2.0, 3.0]).unwrap();
    let sq = apply_spectral_function(&d, |x| x * x).unwrap();
    assert!(sq.matrix().max_abs_diff(&ComplexMatrix::from_real_diag(&[4.0, 9.0])) < 1e-12);
    let root = apply_spectral_function(&a, f64::sqrt).unwrap();
    let back = root.matrix() * root.matrix();
    assert!((&back - a.matrix()).frobenius_norm() <= 1e-9 * a.matrix().frobenius_norm());
    // commutes with the input
    let comm = &(root.matrix() * a.matrix()) - &(a.matrix() * root.matrix());
    assert!(comm.frobenius_norm() <= 1e-10 * a.matrix().frobenius_norm());
}

#[test]
fn spectral_function_domain_error() {
    let d = PositiveMatrix::diagonal(&[0.0, 1.0]).unwrap();
    assert!(matches!(apply_spectral_function(&d, f64::ln), Err(Error::Domain { .. })));
}

#[test]
fn fractional_power_examples() {
    let mut r = rng(2);
    let a = gen_positive(3, 0.1, 10.0, &mut r).unwrap();
    let zero = fractional_power(&a, 0.0).unwrap();
    assert!(zero.matrix().max_abs_diff(&ComplexMatrix::identity(3)) < 1e-12);
    let one = fractional_power(&a, 1.0).unwrap();
    assert!(one.matrix().max_abs_diff(a.matrix()) < 1e-12);
    let d = PositiveMatrix::diagonal(&[4.0, 9.0]).unwrap();
    let h = fractional_power(&d, 0.5).unwrap();
    assert!(h.matrix().max_abs_diff(&ComplexMatrix::from_real_diag(&[2.0, 3.0])) < 1e-12);
    let c = fractional_power(&a, 1.0 / 3.0).unwrap();
    let cube = &(c.matrix() * c.matrix()) * c.matrix();
    assert!((&cube - a.matrix()).frobenius_norm() <= 1e-9 * a.matrix().frobenius_norm());
}

#[test]
fn fractional_power_of_singular_with_negative_exponent() {
    let d = PositiveMatrix::diagonal(&[0.0, 1.0]).unwrap();
    assert!(matches!(fractional_power(&d, -0.5), Err(Error::Singular { .. })));
}

#[test]
fn fractional_power_matches_oracle() {
    let mut r = rng(3);
    for &k in &[0.3, 0.5, 1.0 / 3.0, 2.0, -0.5] {
        let a = gen_positive(4, 0.1, 10.0, &mut r).unwrap();
        let got = fractional_power(&a, k).unwrap();
        let want = to_oracle(a.matrix()).power(oracle::dd(k));
        let diff = want.sub(&to_oracle(got.matrix())).frobenius();
        assert!(oracle::to_f64(diff) <= 1e-12 * oracle::to_f64(want.frobenius()), "kappa {k}");
    }
}

#[test]
fn singular_value_examples() {
    assert_eq!(singular_values(&ComplexMatrix::identity(3)), vec![1.0; 3]);
    let s = singular_values(&ComplexMatrix::from_real_diag(&[3.0, -4.0]));
    assert!(rel(s[0], 4.0) < 1e-14 && rel(s[1], 3.0) < 1e-14);
    let a = gen_gaussian(3, &mut rng(4));
    let e = eig_hermitian(&HermitianMatrix::from_hermitian_part(&a.gram())).unwrap();
    let s = singular_values(&a);
    for (x, l) in s.iter().zip(&e.values) {
        assert!(rel(*x, l.max(0.0).sqrt()) < 1e-12);
    }
    let want = oracle::singular_values(&to_oracle(&a));
    for (x, w) in s.iter().zip(&want) {
        assert!(rel(*x, oracle::to_f64(*w)) < 1e-12);
    }
}

#[test]
fn norm_examples() {
    let d = ComplexMatrix::from_real_diag(&[1.0, 2.0, 3.0]);
    assert!(rel(ui_norm(&d, NormSelector::Trace).unwrap(), 6.0) < 1e-14);
    let f = ComplexMatrix::from_real_diag(&[3.0, 4.0]);
    assert!(rel(ui_norm(&f, NormSelector::Frobenius).unwrap(), 5.0) < 1e-14);
    let a = gen_gaussian(4, &mut rng(5));
    let s = singular_values(&a);
    assert!(rel(ui_norm(&a, NormSelector::KyFan(2)).unwrap(), s[0] + s[1]) < 1e-14);
    assert!(matches!(ui_norm(&a, NormSelector::Schatten(0.5)), Err(Error::Parameter(_))));
    assert!(matches!(ui_norm(&a, NormSelector::KyFan(5)), Err(Error::Parameter(_))));
    for n in NormSelector::standard_family(4) {
        let want = oracle::to_f64(n.to_string().parse::<oracle::Norm>().unwrap().eval(&to_oracle(&a)));
        assert!(rel(ui_norm(&a, n).unwrap(), want) < 1e-12, "{n}");
    }
}

#[test]
fn norm_aliases_agree() {
    let a = gen_gaussian(3, &mut rng(6));
    let pairs = [
        (NormSelector::Trace, NormSelector::Schatten(1.0)),
        (NormSelector::Frobenius, NormSelector::Schatten(2.0)),
        (NormSelector::Spectral, NormSelector::KyFan(1)),
        (NormSelector::Schatten(f64::INFINITY), NormSelector::KyFan(1)),
    ];
    for (x, y) in pairs {
        assert_eq!(ui_norm(&a, x).unwrap(), ui_norm(&a, y).unwrap());
    }
    assert!(rel(ui_norm(&a, NormSelector::Frobenius).unwrap(), a.frobenius_norm()) < 1e-13);
}

#[test]
fn norm_selector_text_round_trip() {
    for text in ["kyfan:2", "schatten:3", "schatten:inf", "trace", "frobenius", "spectral"] {
        let sel: NormSelector = text.parse().unwrap();
        let again: NormSelector = sel.to_string().parse().unwrap();
        assert_eq!(sel.canonical(), again.canonical());
    }
    assert!("schatten:0.5".parse::<NormSelector>().map(|s| s.validate(2)).map_or(true, |r| r.is_err()));
    assert!("nuclear?".parse::<NormSelector>().is_err());
}

#[test]
fn schur_examples() {
    let a = gen_gaussian(3, &mut rng(7));
    let ones = ComplexMatrix::from_fn(3, |_, _| C64::new(1.0, 0.0));
    assert_eq!(schur_product(&a, &ones).unwrap(), a);
    let d = schur_product(&ComplexMatrix::from_real_diag(&[2.0, 3.0]), &ComplexMatrix::from_real_diag(&[5.0, 7.0])).unwrap();
    assert_eq!(d, ComplexMatrix::from_real_diag(&[10.0, 21.0]));
    let b = gen_gaussian(3, &mut rng(8));
    let p = schur_product(&a, &b).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(p.get(i, j), a.get(i, j) * b.get(i, j));
        }
    }
    assert!(matches!(schur_product(&a, &ComplexMatrix::identity(2)), Err(Error::DimMismatch { .. })));
}

#[test]
fn trace_and_det_examples() {
    assert_eq!(trace_of(&ComplexMatrix::identity(4)), C64::new(4.0, 0.0));
    assert!(rel(det_of(&PositiveMatrix::diagonal(&[2.0, 3.0]).unwrap()), 6.0) < 1e-14);
    for seed in 0..10 {
        let a = gen_positive(3, 0.1, 10.0, &mut rng(seed)).unwrap();
        let det = det_of(&a);
        let prod: f64 = a.eigen().values.iter().product();
        assert!(rel(det, prod) < 1e-13);
        let cof = cofactor_det3(a.matrix());
        assert!(rel(det, cof.re) < 1e-11 && cof.im.abs() < 1e-11 * det.max(1.0));
        assert!(rel(det, oracle::to_f64(to_oracle(a.matrix()).det_h())) < 1e-12);
    }
}

#[test]
fn loewner_gap_examples() {
    let a = random_hermitian(3, 9);
    assert!(loewner_gap(&a, &a).unwrap().abs() < 1e-14);
    let gap = loewner_gap(&HermitianMatrix::identity(2), &HermitianMatrix::scalar_multiple(2, 2.0)).unwrap();
    assert!(rel(gap, 1.0) < 1e-15);
    let p = gen_positive(3, 0.5, 4.0, &mut rng(10)).unwrap();
    let b = a.add(p.hermitian()).unwrap();
    assert!(rel(loewner_gap(&a, &b).unwrap(), p.min_eigenvalue()) < 1e-10);
    assert!(matches!(loewner_gap(&a, &HermitianMatrix::identity(2)), Err(Error::DimMismatch { .. })));
}

#[test]
fn construction_rejects_bad_input() {
    assert!(matches!(ComplexMatrix::new(2, vec![C64::new(1.0, 0.0); 3]), Err(Error::BadShape { .. })));
    assert!(matches!(ComplexMatrix::new(0, vec![]), Err(Error::EmptyMatrix)));
    assert!(matches!(ComplexMatrix::from_real(1, &[f64::NAN]), Err(Error::NonFinite(_))));
    let skew = ComplexMatrix::from_real(2, &[1.0, 2.0, 0.0, 1.0]).unwrap();
    assert!(matches!(HermitianMatrix::new(skew), Err(Error::NotHermitian { .. })));
    let indefinite = ComplexMatrix::from_real_diag(&[1.0, -1.0]);
    assert!(matches!(PositiveMatrix::from_matrix(indefinite), Err(Error::NotPositive { .. })));
}

#[test]
fn matrix_json_round_trip_is_exact() {
    let a = gen_gaussian(3, &mut rng(11));
    let text = serde_json::to_string(&a).unwrap();
    let back: ComplexMatrix = serde_json::from_str(&text).unwrap();
    assert_eq!(a, back);
    assert!(serde_json::from_str::<ComplexMatrix>(r#"{"dim":2,"entries":[[1,0]]}"#).is_err());
}

fn dim_and_seed(max_dim: usize) -> impl Strategy<Value = (usize, u64)> {
    (1..=max_dim, any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eig_reconstructs_and_is_unitary((dim, seed) in dim_and_seed(16)) {
        let a = random_hermitian(dim, seed);
        let e = eig_hermitian(&a).unwrap();
        let back = e.reconstruct_with(|x| x);
        let scale = a.matrix().frobenius_norm().max(1.0);
        prop_assert!((&back - a.matrix()).frobenius_norm() <= 1e-10 * scale);
        prop_assert!(e.unitarity_defect() <= 1e-10 * (dim as f64).sqrt().max(1.0));
        prop_assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn norms_are_unitarily_invariant((dim, seed) in dim_and_seed(6)) {
        let mut r = rng(seed);
        let a = gen_gaussian(dim, &mut r);
        let u = gen_unitary(dim, &mut r).unwrap();
        let v = gen_unitary(dim, &mut r).unwrap();
        let moved = &(&u * &a) * &v;
        for sel in NormSelector::standard_family(dim) {
            let x = ui_norm(&a, sel).unwrap();
            let y = ui_norm(&moved, sel).unwrap();
            prop_assert!((x - y).abs() <= 1e-9 * x, "{sel}: {x} vs {y}");
        }
    }

    #[test]
    fn trace_norm_is_trace_of_modulus((dim, seed) in dim_and_seed(6)) {
        let a = gen_gaussian(dim, &mut rng(seed));
        let modulus = abs_of(&a).unwrap();
        let t = ui_norm(&a, NormSelector::Schatten(1.0)).unwrap();
        prop_assert!(rel(t, trace_of(modulus.matrix()).re) <= 1e-10);
    }

    #[test]
    fn power_round_trip((dim, seed) in dim_and_seed(6), k in prop::sample::select(vec![1.0 / 3.0, 0.5, 2.0])) {
        let a = gen_positive(dim, 0.1, 10.0, &mut rng(seed)).unwrap();
        let back = fractional_power(&fractional_power(&a, k).unwrap(), 1.0 / k).unwrap();
        prop_assert!((back.matrix() - a.matrix()).frobenius_norm() <= 1e-8 * a.matrix().frobenius_norm());
    }

    #[test]
    fn psd_singular_values_are_eigenvalues((dim, seed) in dim_and_seed(6)) {
        let a = gen_positive(dim, 0.01, 100.0, &mut rng(seed)).unwrap();
        let s = singular_values(a.matrix());
        for (x, l) in s.iter().zip(&a.eigen().values) {
            prop_assert!(rel(*x, *l) <= 1e-10);
        }
    }
}
