use super::params::InnerSolver;
use crate::error::{Error, Result};
use crate::fem::{FastSineSolver, GridSpec, Side, SubdomainSystem};
use crate::linalg::{cg_solve, norm2, SparseMatrix};

/// A subdomain matrix ready to be solved against many right-hand sides.
pub(crate) enum PreparedSolve {
    Cg { matrix: SparseMatrix, tol: f64 },
    Fast(FastSineSolver),
}

impl PreparedSolve {
    /// `A_h + γ Rᵀ M_Γ R` on the given subdomain.
    pub fn robin(system: &SubdomainSystem, gamma: f64, inner: InnerSolver) -> Self {
        match inner {
            InnerSolver::Cg { tol } => PreparedSolve::Cg {
                matrix: system.robin_matrix(gamma),
                tol,
            },
            InnerSolver::FastSine => PreparedSolve::Fast(FastSineSolver::robin(system.grid(), system.side(), gamma)),
        }
    }

    /// Interior block `A_II` of the subdomain stiffness (interface column
    /// eliminated as Dirichlet data). `None` when there are no interior nodes.
    pub fn interior(system: &SubdomainSystem, inner: InnerSolver) -> Option<Self> {
        let off = system.interface_offset();
        if off == 0 {
            return None;
        }
        Some(match inner {
            InnerSolver::Cg { tol } => PreparedSolve::Cg {
                matrix: system.stiffness().submatrix(0..off, 0..off),
                tol,
            },
            InnerSolver::FastSine => {
                let g: &GridSpec = system.grid();
                let side: Side = system.side();
                PreparedSolve::Fast(FastSineSolver::dirichlet(g, g.columns(side) - 1))
            }
        })
    }

    /// Solves against `b`. A CG solve started from `guess` iterates on the
    /// correction, so its error scales with `‖b − A·guess‖` instead of `‖b‖`.
    pub fn solve(&self, b: &[f64], guess: Option<&[f64]>) -> Result<Vec<f64>> {
        match self {
            PreparedSolve::Cg { matrix, tol } => {
                let cap = 10 * matrix.rows() + 100;
                let wrap = |e| match e {
                    Error::NotConverged {
                        iterations, residual, ..
                    } => Error::NotConverged {
                        solver: "subdomain CG",
                        iterations,
                        residual,
                    },
                    other => other,
                };
                let Some(x0) = guess.filter(|x| x.len() == b.len()) else {
                    return Ok(cg_solve(matrix, b, *tol, cap).map_err(wrap)?.x);
                };
                let ax = matrix.spmv(x0)?;
                let r: Vec<f64> = b.iter().zip(&ax).map(|(b, a)| b - a).collect();
                if norm2(&r) == 0.0 {
                    return Ok(x0.to_vec());
                }
                let d = cg_solve(matrix, &r, *tol, cap).map_err(wrap)?.x;
                Ok(x0.iter().zip(&d).map(|(x, d)| x + d).collect())
            }
            PreparedSolve::Fast(s) => s.solve(b),
        }
    }
}
