use std::fmt;
use std::str::FromStr;

use crate::dd::Dd;

use crate::complex::Cdd;

const MAX_SWEEPS: usize = 60;
const OFF_TOL: f64 = 1e-31;

/// Dense square complex matrix in double-double, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    pub n: usize,
    pub a: Vec<Cdd>,
}

impl Mat {
    pub fn zeros(n: usize) -> Self {
        Mat { n, a: vec![Cdd::ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diag(&vec![Dd::from(1.0); n])
    }

    pub fn diag(d: &[Dd]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &x) in d.iter().enumerate() {
            m.a[i * d.len() + i] = Cdd::real(x);
        }
        m
    }

    /// Row-major `(re, im)` entries.
    pub fn from_entries(n: usize, entries: &[(f64, f64)]) -> Self {
        assert_eq!(entries.len(), n * n, "entry count");
        Mat { n, a: entries.iter().map(|&(re, im)| Cdd::new(re, im)).collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> Cdd {
        self.a[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: Cdd) {
        self.a[i * self.n + j] = v;
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(j, i, self.get(i, j).conj());
            }
        }
        m
    }

    pub fn hermitian_part(&self) -> Self {
        let h = Dd::from(0.5);
        let adj = self.adjoint();
        Mat { n: self.n, a: self.a.iter().zip(&adj.a).map(|(x, y)| (*x + *y).scale(h)).collect() }
    }

    pub fn add(&self, o: &Mat) -> Mat {
        Mat { n: self.n, a: self.a.iter().zip(&o.a).map(|(x, y)| *x + *y).collect() }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        Mat { n: self.n, a: self.a.iter().zip(&o.a).map(|(x, y)| *x - *y).collect() }
    }

    pub fn scale(&self, c: Dd) -> Mat {
        Mat { n: self.n, a: self.a.iter().map(|x| x.scale(c)).collect() }
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        let n = self.n;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Cdd::ZERO;
                for k in 0..n {
                    acc += self.get(i, k) * o.get(k, j);
                }
                m.set(i, j, acc);
            }
        }
        m
    }

    pub fn trace(&self) -> Dd {
        (0..self.n).fold(Dd::from(0.0), |acc, i| acc + self.get(i, i).re)
    }

    pub fn frobenius(&self) -> Dd {
        self.a.iter().fold(Dd::from(0.0), |acc, x| acc + x.norm_sqr()).sqrt()
    }

    /// `f` applied to the spectrum of the Hermitian part.
    pub fn apply(&self, f: impl Fn(Dd) -> Dd) -> Mat {
        let e = eigh(self);
        let mapped: Vec<Dd> = e.values.iter().map(|&x| f(x)).collect();
        e.vectors.mul(&Mat::diag(&mapped)).mul(&e.vectors.adjoint()).hermitian_part()
    }

    pub fn power(&self, p: Dd) -> Mat {
        self.apply(|x| pow(x, p))
    }

    /// Product of the eigenvalues of the Hermitian part.
    pub fn det_h(&self) -> Dd {
        eigh(self).values.iter().fold(Dd::from(1.0), |acc, &x| acc * x)
    }
}

/// `x^p` for `x > 0`, with `x^0 = 1` and `0^p = 0` for `p > 0`.
pub fn pow(x: Dd, p: Dd) -> Dd {
    if p == 0.0 {
        Dd::from(1.0)
    } else if p == 1.0 {
        x
    } else if p == 0.5 {
        x.sqrt()
    } else if x <= 0.0 {
        Dd::from(0.0)
    } else {
        (p * x.ln()).exp()
    }
}

pub struct Eigh {
    /// Ascending.
    pub values: Vec<Dd>,
    /// Columns are eigenvectors.
    pub vectors: Mat,
}

impl Eigh {
    pub fn min(&self) -> Dd {
        self.values[0]
    }

    pub fn max(&self) -> Dd {
        self.values[self.values.len() - 1]
    }
}

fn off_norm(a: &Mat) -> Dd {
    let mut acc = Dd::from(0.0);
    for i in 0..a.n {
        for j in 0..a.n {
            if i != j {
                acc += a.get(i, j).norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Cyclic complex Jacobi on the Hermitian part of `m`.
pub fn eigh(m: &Mat) -> Eigh {
    let n = m.n;
    let mut a = m.hermitian_part();
    let mut v = Mat::identity(n);
    let scale = a.frobenius();
    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) <= scale * OFF_TOL {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| a.get(i, i).re.partial_cmp(&a.get(j, j).re).expect("finite eigenvalues"));
    let values = idx.iter().map(|&i| a.get(i, i).re).collect();
    let mut vectors = Mat::zeros(n);
    for (c, &i) in idx.iter().enumerate() {
        for r in 0..n {
            vectors.set(r, c, v.get(r, i));
        }
    }
    Eigh { values, vectors }
}

fn rotate(a: &mut Mat, v: &mut Mat, p: usize, q: usize) {
    let g = a.get(p, q);
    let r = g.abs();
    if r == 0.0 {
        return;
    }
    let one = Dd::from(1.0);
    let e = g.scale(one / r);
    let zeta = (a.get(q, q).re - a.get(p, p).re) / (r * 2.0);
    let t = if zeta == 0.0 {
        one
    } else {
        let s = if zeta > 0.0 { one } else { -one };
        s / (zeta.abs() + (one + zeta * zeta).sqrt())
    };
    let c = one / (one + t * t).sqrt();
    let s = t * c;
    let se = e.scale(s);
    let c = Cdd::real(c);
    let n = a.n;
    // columns: A ← A J
    for k in 0..n {
        let (akp, akq) = (a.get(k, p), a.get(k, q));
        a.set(k, p, akp * c - akq * se.conj());
        a.set(k, q, akp * se + akq * c);
        let (vkp, vkq) = (v.get(k, p), v.get(k, q));
        v.set(k, p, vkp * c - vkq * se.conj());
        v.set(k, q, vkp * se + vkq * c);
    }
    // rows: A ← J* A
    for k in 0..n {
        let (apk, aqk) = (a.get(p, k), a.get(q, k));
        a.set(p, k, c * apk - se * aqk);
        a.set(q, k, se.conj() * apk + c * aqk);
    }
    a.set(p, q, Cdd::ZERO);
    a.set(q, p, Cdd::ZERO);
    a.set(p, p, Cdd::real(a.get(p, p).re));
    a.set(q, q, Cdd::real(a.get(q, q).re));
}

/// Descending singular values, as square roots of the eigenvalues of `A*A`.
pub fn singular_values(m: &Mat) -> Vec<Dd> {
    let mut s: Vec<Dd> = eigh(&m.adjoint().mul(m)).values.iter().map(|&x| if x > 0.0 { x.sqrt() } else { Dd::from(0.0) }).collect();
    s.reverse();
    s
}

/// Ky Fan `k` or Schatten `p` norm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Norm {
    KyFan(usize),
    Schatten(f64),
    Spectral,
}

impl Norm {
    pub fn eval(self, m: &Mat) -> Dd {
        let s = singular_values(m);
        match self {
            Norm::KyFan(k) => s.iter().take(k).fold(Dd::from(0.0), |a, &x| a + x),
            Norm::Spectral => s[0],
            Norm::Schatten(p) if p == 1.0 => s.iter().fold(Dd::from(0.0), |a, &x| a + x),
            Norm::Schatten(p) if p == 2.0 => s.iter().fold(Dd::from(0.0), |a, &x| a + x * x).sqrt(),
            Norm::Schatten(p) => {
                let p = Dd::from(p);
                pow(s.iter().fold(Dd::from(0.0), |a, &x| a + pow(x, p)), Dd::from(1.0) / p)
            }
        }
    }
}

impl FromStr for Norm {
    type Err = String;

    /// `kyfan:k`, `schatten:p`, `schatten:inf`.
    fn from_str(s: &str) -> Result<Self, String> {
        let (family, arg) = s.split_once(':').ok_or_else(|| format!("bad norm `{s}`"))?;
        match (family, arg) {
            ("kyfan", k) => k.parse().map(Norm::KyFan).map_err(|e| format!("{s}: {e}")),
            ("schatten", "inf") => Ok(Norm::Spectral),
            ("schatten", p) => p.parse().map(Norm::Schatten).map_err(|e| format!("{s}: {e}")),
            _ => Err(format!("bad norm `{s}`")),
        }
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Norm::KyFan(k) => write!(f, "kyfan:{k}"),
            Norm::Schatten(p) => write!(f, "schatten:{p}"),
            Norm::Spectral => write!(f, "schatten:inf"),
        }
    }
}
