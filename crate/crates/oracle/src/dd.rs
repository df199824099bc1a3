use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use twofloat::TwoFloat;

/// Double-double number. Addition, multiplication and square root come from
/// `twofloat`; division, `exp` and `ln` are computed here to full precision.
#[derive(Clone, Copy, Default, PartialEq, PartialOrd)]
pub struct Dd(TwoFloat);

const LN2: Dd = Dd(twofloat::consts::LN_2);

impl Dd {
    pub const fn from_f64(x: f64) -> Dd {
        Dd(TwoFloat::from_f64(x))
    }

    pub fn hi(self) -> f64 {
        self.0.hi()
    }

    pub fn lo(self) -> f64 {
        self.0.lo()
    }

    pub fn abs(self) -> Dd {
        if self.hi() < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn sqrt(self) -> Dd {
        if self.hi() <= 0.0 {
            return Dd::from_f64(0.0);
        }
        Dd(self.0.sqrt())
    }

    pub fn powi(self, n: i32) -> Dd {
        let mut acc = Dd::from_f64(1.0);
        let mut base = self;
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            k >>= 1;
        }
        if n < 0 {
            Dd::from_f64(1.0) / acc
        } else {
            acc
        }
    }

    pub fn exp(self) -> Dd {
        let x = self.hi();
        if x > 709.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        if x < -745.0 {
            return Dd::from_f64(0.0);
        }
        let k = (x / std::f64::consts::LN_2).round();
        // |r| ≤ ln2/2048 after the scaling by 2⁻¹⁰
        let r = (self - LN2 * k) * (1.0 / 1024.0);
        let mut term = r;
        let mut s = r;
        for i in 2..=14 {
            term = term * r / i as f64;
            s += term;
        }
        // (1 + s)² − 1 = 2s + s²
        for _ in 0..10 {
            s = s * 2.0 + s * s;
        }
        (s + 1.0) * 2f64.powi(k as i32)
    }

    pub fn ln(self) -> Dd {
        if self.hi() <= 0.0 {
            return Dd::from_f64(if self.hi() == 0.0 { f64::NEG_INFINITY } else { f64::NAN });
        }
        let mut y = Dd::from_f64(self.hi().ln());
        for _ in 0..2 {
            y = y + self * (-y).exp() - 1.0;
        }
        y
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd::from_f64(x)
    }
}

impl fmt::Debug for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}{:+e}", self.hi(), self.lo())
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.hi() + self.lo())
    }
}

impl PartialEq<f64> for Dd {
    fn eq(&self, o: &f64) -> bool {
        *self == Dd::from_f64(*o)
    }
}

impl PartialOrd<f64> for Dd {
    fn partial_cmp(&self, o: &f64) -> Option<Ordering> {
        self.partial_cmp(&Dd::from_f64(*o))
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd(-self.0)
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, o: Dd) -> Dd {
        Dd(self.0 + o.0)
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, o: Dd) -> Dd {
        Dd(self.0 - o.0)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, o: Dd) -> Dd {
        Dd(self.0 * o.0)
    }
}

impl Div for Dd {
    type Output = Dd;
    /// Three correction steps on the leading quotient.
    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi() / o.hi();
        let r = self - o * q1;
        let q2 = r.hi() / o.hi();
        let r = r - o * q2;
        let q3 = r.hi() / o.hi();
        Dd(TwoFloat::new_add(q1, q2)) + q3
    }
}

macro_rules! mixed {
    ($tr:ident, $f:ident) => {
        impl $tr<f64> for Dd {
            type Output = Dd;
            fn $f(self, o: f64) -> Dd {
                $tr::$f(self, Dd::from_f64(o))
            }
        }
        impl $tr<Dd> for f64 {
            type Output = Dd;
            fn $f(self, o: Dd) -> Dd {
                $tr::$f(Dd::from_f64(self), o)
            }
        }
    };
}

mixed!(Add, add);
mixed!(Sub, sub);
mixed!(Mul, mul);
mixed!(Div, div);

impl AddAssign for Dd {
    fn add_assign(&mut self, o: Dd) {
        *self = *self + o;
    }
}

impl SubAssign for Dd {
    fn sub_assign(&mut self, o: Dd) {
        *self = *self - o;
    }
}

impl MulAssign for Dd {
    fn mul_assign(&mut self, o: Dd) {
        *self = *self * o;
    }
}
