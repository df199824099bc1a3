use std::fmt::Write;
use std::path::PathBuf;

use heinzlab::harness::CampaignReport;
use heinzlab::linalg::{ComplexMatrix, C64};
use heinzlab::scalar::CheckResult;
use heinzlab::suites::{InequalityCase, SuiteRegistry, SuiteShape, SuiteStatus};

/// `x` with 15 significant digits and trailing zeros removed, like C's `%.15g`.
pub fn g15(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        trim(&format!("{x:.decimals$}")).to_string()
    } else {
        format!("{}e{exp}", trim(mantissa))
    }
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn complex(z: C64) -> String {
    if z.im == 0.0 {
        g15(z.re)
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{}{sign}{}i", g15(z.re), g15(z.im.abs()))
    }
}

pub fn matrix(m: &ComplexMatrix) -> String {
    let mut s = String::new();
    for i in 0..m.dim() {
        let row: Vec<String> = (0..m.dim()).map(|j| complex(m.get(i, j))).collect();
        writeln!(s, "{}", row.join("\t")).expect("write to string");
    }
    s
}

fn status(s: SuiteStatus) -> &'static str {
    match s {
        SuiteStatus::Asserted => "asserted",
        SuiteStatus::Recorded => "recorded",
    }
}

pub fn suite_table(registry: &SuiteRegistry) -> String {
    let mut s = String::new();
    writeln!(s, "{:<28} {:<9} {:<7} {}", "SUITE", "STATUS", "SHAPE", "TITLE").expect("write to string");
    for suite in registry.iter().filter(|s| !s.internal()) {
        let shape = match suite.shape() {
            SuiteShape::Scalar => "scalar",
            SuiteShape::Matrix => "matrix",
        };
        writeln!(s, "{:<28} {:<9} {:<7} {}", suite.id(), status(suite.status()), shape, suite.title()).expect("write to string");
    }
    s
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.3e}")).unwrap_or_else(|| "-".into())
}

pub fn report_table(report: &CampaignReport, written: &[(String, PathBuf)]) -> String {
    let mut s = String::new();
    let header = ["SUITE", "STATUS", "TRIALS", "VIOL", "ERR", "WORST_REL", "CEX_DIM"];
    writeln!(s, "{:<28} {:<9} {:>7} {:>6} {:>5} {:>11} {:>7}", header[0], header[1], header[2], header[3], header[4], header[5], header[6])
        .expect("write to string");
    for r in &report.suites {
        let cex = r.counterexample.as_ref().map(|c| format!("{}", c.case.dim)).unwrap_or_else(|| "-".into());
        writeln!(
            s,
            "{:<28} {:<9} {:>7} {:>6} {:>5} {:>11} {:>7}",
            r.id,
            status(r.status),
            r.trials,
            r.violations,
            r.errors,
            opt(r.worst_rel_slack),
            cex
        )
        .expect("write to string");
    }
    for r in report.suites.iter().filter(|r| r.first_error.is_some()) {
        writeln!(s, "error in {}: {}", r.id, r.first_error.as_deref().unwrap_or_default()).expect("write to string");
    }
    for (id, path) in written {
        writeln!(s, "counterexample {id}: {}", path.display()).expect("write to string");
    }
    let failed: Vec<&str> = report.suites.iter().filter(|r| r.failed()).map(|r| r.id.as_str()).collect();
    if failed.is_empty() {
        writeln!(s, "no asserted suite violated").expect("write to string");
    } else {
        writeln!(s, "asserted suites violated: {}", failed.join(", ")).expect("write to string");
    }
    s
}

pub fn result_table(case: &InequalityCase, r: &CheckResult) -> String {
    let mut s = String::new();
    writeln!(s, "{} dim {} seed {}", case.suite_id, case.dim, case.seed).expect("write to string");
    writeln!(s, "{:<32} {:>22} {:>22} {:>11}", "PART", "LHS", "RHS", "REL_SLACK").expect("write to string");
    for p in &r.parts {
        writeln!(s, "{:<32} {:>22} {:>22} {:>11.3e}", p.label, g15(p.lhs), g15(p.rhs), p.rel_slack).expect("write to string");
    }
    writeln!(s, "verdict: {}", if r.passed() { "pass" } else { "violate" }).expect("write to string");
    s
}

#[cfg(test)]
mod tests {
    use super::g15;

    #[test]
    fn fifteen_digits() {
        assert_eq!(g15(1.0), "1");
        assert_eq!(g15(5.000000000000001), "5");
        assert_eq!(g15(1.5625), "1.5625");
        assert_eq!(g15(-0.1), "-0.1");
        assert_eq!(g15(1.0 / 3.0), "0.333333333333333");
        assert_eq!(g15(1e20), "1e20");
        assert_eq!(g15(1.25e-7), "1.25e-7");
    }
}
