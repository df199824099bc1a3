//! Double-double reference evaluations. Shares no code with the main library
//! so it can serve as an independent oracle in tests.

mod complex;
mod dd;
mod matrix;
mod reference;

pub use complex::Cdd;
pub use matrix::{eigh, pow, singular_values, Eigh, Mat, Norm};
pub use reference::*;
pub use dd::Dd;

/// Rounds a double-double to the nearest `f64`.
pub fn to_f64(x: Dd) -> f64 {
    x.hi() + x.lo()
}

pub fn dd(x: f64) -> Dd {
    Dd::from(x)
}

/// `|a − b| / max(1, |a|, |b|)`.
pub fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1f64.max(a.abs()).max(b.abs())
}
