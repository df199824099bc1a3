//! Matrix means, Heinz/Heron interpolation, Kantorovich-type refinements of
//! Young's inequality, and a randomized harness that checks them.

pub mod error;
pub mod linalg;

pub use error::{Error, Result};
pub mod scalar;
pub mod means;
pub mod suites;
pub mod harness;
