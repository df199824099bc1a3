use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::suites::{InequalityCase, InequalitySuite, OperandRole, SuiteShape};

const MAX_STEPS: usize = 500;

/// Evaluates without error and fails under `tol`.
pub fn violates(suite: &dyn InequalitySuite, case: &InequalityCase, tol: f64) -> bool {
    suite.evaluate(case).is_ok_and(|r| !r.rejudge(tol).passed())
}

/// Greedy reduction of a violating case: drop dimensions, drop list entries,
/// pull parameters and scalars toward their targets, shrink off-diagonal mass.
/// Every accepted step keeps the violation.
pub fn shrink(suite: &dyn InequalitySuite, case: &InequalityCase, tol: f64) -> Result<InequalityCase> {
    if !violates(suite, case, tol) {
        return Err(Error::Contract(format!("case for `{}` does not violate its inequality", case.suite_id)));
    }
    let mut cur = case.clone();
    for _ in 0..MAX_STEPS {
        match candidates(suite, &cur).into_iter().find(|c| violates(suite, c, tol)) {
            Some(next) => cur = next,
            None => break,
        }
    }
    Ok(cur)
}

fn candidates(suite: &dyn InequalitySuite, case: &InequalityCase) -> Vec<InequalityCase> {
    let mut out = Vec::new();
    let kernel_nodes = suite.shape() == SuiteShape::Matrix && case.operands.is_empty() && case.scalars.len() == case.dim;
    if case.dim > 1 {
        for i in 0..case.dim {
            let mut c = case.clone();
            c.dim -= 1;
            let ops: Result<Vec<ComplexMatrix>> = case.operands.iter().map(|m| m.without_index(i)).collect();
            let Ok(ops) = ops else { continue };
            c.operands = ops;
            if kernel_nodes {
                c.scalars.remove(i);
            }
            c.norms.retain(|s| s.validate(c.dim).is_ok());
            if case.norms.is_empty() || !c.norms.is_empty() {
                out.push(c);
            }
        }
    }
    if let Some(w) = &case.weights {
        for k in 0..w.len() {
            let Some(smaller) = w.without(k) else { continue };
            let mut c = case.clone();
            if case.operands.len() == w.len() {
                c.operands.remove(k);
            } else if case.scalars.len() == w.len() {
                c.scalars.remove(k);
            } else {
                continue;
            }
            c.weights = Some(smaller);
            out.push(c);
        }
    }
    if case.norms.len() > 1 {
        for k in 0..case.norms.len() {
            let mut c = case.clone();
            c.norms.remove(k);
            out.push(c);
        }
    }
    for &field in suite.param_fields() {
        let v = field.get(&case.params);
        let target = field.target(&case.params);
        if v == target {
            continue;
        }
        let next = if field.is_integer() {
            if v > target { v - 1.0 } else { v + 1.0 }
        } else if (v - target).abs() <= 1e-3 * target.abs().max(1.0) {
            target
        } else {
            (v + target) / 2.0
        };
        let mut c = case.clone();
        field.set(&mut c.params, next);
        out.push(c);
    }
    for i in 0..case.scalars.len() {
        let v = case.scalars[i];
        if v == 1.0 || v <= 0.0 {
            continue;
        }
        let mut c = case.clone();
        c.scalars[i] = if v.ln().abs() < 1e-3 { 1.0 } else { v.sqrt() };
        // a pair suite keeps ρ = σ cases equal
        out.push(c);
    }
    for k in 0..case.operands.len() {
        let m = &case.operands[k];
        let z = m.get(0, 0);
        if m.dim() == 1 && z.im == 0.0 && z.re > 0.0 && z.re != 1.0 {
            let mut c = case.clone();
            let v = if z.re.ln().abs() < 1e-3 { 1.0 } else { z.re.sqrt() };
            c.operands[k] = ComplexMatrix::scalar(v);
            out.push(c);
        }
        let off = m.off_diagonal_norm();
        if off == 0.0 {
            continue;
        }
        let mut c = case.clone();
        c.operands[k] = if off <= 1e-6 * m.frobenius_norm() {
            let d: Vec<_> = m.diagonal();
            ComplexMatrix::from_fn(m.dim(), |i, j| if i == j { d[i] } else { Default::default() })
        } else {
            m.decimate_off_diagonal()
        };
        out.push(c);
    }
    out
}

/// The case with every operand moved by `(U, V)` according to the suite's roles.
/// `None` when the suite declares no roles.
pub fn conjugate_case(suite: &dyn InequalitySuite, case: &InequalityCase, u: &ComplexMatrix, v: &ComplexMatrix) -> Option<Result<InequalityCase>> {
    let roles = suite.operand_roles();
    let last = *roles.last()?;
    let moved: Result<Vec<ComplexMatrix>> = case
        .operands
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let role = roles.get(i).copied().unwrap_or(last);
            Ok(match role {
                OperandRole::Left => conjugate(a, u)?,
                OperandRole::Right => conjugate(a, v)?,
                OperandRole::Cross => u.try_mul(a)?.try_mul(&v.adjoint())?,
            })
        })
        .collect();
    Some(moved.map(|ops| InequalityCase { operands: ops, ..case.clone() }))
}

/// `U A U*`, re-symmetrized when `A` is Hermitian.
fn conjugate(a: &ComplexMatrix, u: &ComplexMatrix) -> Result<ComplexMatrix> {
    let c = a.conjugate_by(u)?;
    Ok(if a.hermitian_defect() == 0.0 { c.hermitian_part() } else { c })
}
