use super::{dot, LinearOperator};
use crate::error::{check_len, Error, Result};

/// Solution and convergence record of a conjugate-gradient solve.
#[derive(Debug, Clone)]
pub struct CgOutcome {
    pub x: Vec<f64>,
    pub iterations: usize,
    pub relative_residual: f64,
}

/// Conjugate gradients for SPD `a`, starting from zero. Stops when the
/// recursively updated residual satisfies `‖r‖₂ ≤ tol ‖b‖₂`.
pub fn cg_solve<A: LinearOperator + ?Sized>(a: &A, b: &[f64], tol: f64, max_iter: usize) -> Result<CgOutcome> {
    cg_solve_from(a, b, &vec![0.0; b.len()], tol, max_iter)
}

/// Conjugate gradients started from `x0`. Stops when `‖r‖₂ ≤ tol ‖r₀‖₂`
/// with `r₀ = b − A x₀`; `relative_residual` is reported against `‖r₀‖₂`.
///
/// Warm starts from a nearby solution keep the solve error proportional to
/// the correction instead of to `‖b‖`.
pub fn cg_solve_from<A: LinearOperator + ?Sized>(
    a: &A,
    b: &[f64],
    x0: &[f64],
    tol: f64,
    max_iter: usize,
) -> Result<CgOutcome> {
    let n = a.dim();
    check_len(n, b.len())?;
    check_len(n, x0.len())?;
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "CG tolerance must be positive, got {tol}"
        )));
    }
    let mut x = x0.to_vec();
    let mut r = vec![0.0; n];
    a.apply(&x, &mut r);
    r.iter_mut().zip(b).for_each(|(ri, bi)| *ri = bi - *ri);
    let r0norm = dot(&r, &r).sqrt();
    if r0norm == 0.0 {
        return Ok(CgOutcome {
            x,
            iterations: 0,
            relative_residual: 0.0,
        });
    }

    let mut p = r.clone();
    let mut ap = vec![0.0; n];
    let mut rr = dot(&r, &r);
    let target = (tol * r0norm).powi(2);
    for it in 1..=max_iter {
        a.apply(&p, &mut ap);
        let pap = dot(&p, &ap);
        if !(pap > 0.0) {
            return Err(Error::Precondition(format!(
                "operator is not positive definite (pᵀAp = {pap:e} at CG step {it})"
            )));
        }
        let alpha = rr / pap;
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        let rr_new = dot(&r, &r);
        if rr_new <= target {
            return Ok(CgOutcome {
                x,
                iterations: it,
                relative_residual: rr_new.sqrt() / r0norm,
            });
        }
        let beta = rr_new / rr;
        for i in 0..n {
            p[i] = r[i] + beta * p[i];
        }
        rr = rr_new;
    }
    Err(Error::NotConverged {
        solver: "CG",
        iterations: max_iter,
        residual: rr.sqrt() / r0norm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{DenseMatrix, SparseMatrix};

    #[test]
    fn identity_converges_in_one_step() {
        let b = vec![3.0, -1.0, 2.0];
        let out = cg_solve(&SparseMatrix::identity(3), &b, 1e-14, 10).unwrap();
        assert_eq!(out.iterations, 1);
        assert_eq!(out.x, b);
    }

    #[test]
    fn zero_rhs_gives_zero() {
        let out = cg_solve(&SparseMatrix::identity(4), &[0.0; 4], 1e-14, 10).unwrap();
        assert_eq!(out.x, vec![0.0; 4]);
        assert_eq!(out.iterations, 0);
    }

    #[test]
    fn warm_start_at_solution_takes_no_steps() {
        let a = DenseMatrix::from_fn(4, 4, |i, j| {
            if i == j {
                3.0
            } else if i.abs_diff(j) == 1 {
                -1.0
            } else {
                0.0
            }
        });
        let x = vec![1.0, -2.0, 0.5, 4.0];
        let b = a.matvec(&x).unwrap();
        let out = cg_solve_from(&a, &b, &x, 1e-14, 10).unwrap();
        assert_eq!(out.iterations, 0);
        let cold = cg_solve(&a, &b, 1e-14, 10).unwrap();
        let warm = cg_solve_from(&a, &b, &[1.0, -2.0, 0.0, 4.0], 1e-14, 10).unwrap();
        for i in 0..4 {
            assert!((cold.x[i] - x[i]).abs() < 1e-13);
            assert!((warm.x[i] - x[i]).abs() < 1e-13);
        }
    }

    #[test]
    fn non_convergence_is_distinct_from_dimension_error() {
        let a = DenseMatrix::from_fn(20, 20, |i, j| if i == j { (i + 1) as f64 } else { 0.0 });
        let b = vec![1.0; 20];
        assert!(matches!(cg_solve(&a, &b, 1e-14, 3), Err(Error::NotConverged { .. })));
        assert!(matches!(
            cg_solve(&a, &[1.0], 1e-14, 3),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
