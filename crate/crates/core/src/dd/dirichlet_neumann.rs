use super::inner::PreparedSolve;
use super::params::{DDParams, StopRule};
use super::report::{reduction_rate_from_history, DDReport};
use super::robin::check_pair;
use crate::error::{check_len, Result};
use crate::fem::SubdomainSystem;
use crate::linalg::norm_inf;

/// Right-hand side of the Neumann step on Ω₂.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DnRhs {
    /// `(f, v)_{Ω₂} − a₁(u^m, v)` for interface hats `v` extended by zero.
    #[default]
    AsWritten,
    /// Also adds `(f, v)_{Ω₁}` for those hats, making the fixed point the
    /// single-domain solution.
    WithLeftSource,
}

/// Dirichlet-Neumann iteration with relaxation `params.theta`, started from
/// the interface values `w_init`.
///
/// Each sweep solves the interior of Ω₁ with Dirichlet data `w^m` on Γ, then
/// Ω₂ with the natural condition on Γ driven by the left flux, and relaxes
/// `w^{m+1} = θ w^m + (1 − θ) w̃|_Γ`.
pub fn dirichlet_neumann_solve(
    left: &SubdomainSystem,
    right: &SubdomainSystem,
    params: &DDParams,
    w_init: &[f64],
    rhs_kind: DnRhs,
) -> Result<DDReport> {
    params.validate()?;
    check_pair(left, right)?;
    let m = left.grid().n_interface();
    check_len(m, w_init.len())?;
    let off = left.interface_offset();
    let a1 = left.stiffness();
    let a_ig = a1.submatrix(0..off, off..off + m);
    let interior = PreparedSolve::interior(left, params.inner);
    let neumann = PreparedSolve::robin(right, 0.0, params.inner);
    let f1 = left.load();
    let roff = right.interface_offset();

    let mut history = vec![w_init.to_vec()];
    let mut first = None;
    let mut last = (Vec::new(), Vec::new());
    let mut converged = false;
    for _ in 0..params.max_iter {
        let w = history.last().expect("non-empty");

        let mut u = vec![0.0; left.dim()];
        if let Some(solver) = &interior {
            let coupling = a_ig.spmv(w)?;
            let rhs: Vec<f64> = f1[..off].iter().zip(&coupling).map(|(f, c)| f - c).collect();
            u[..off].copy_from_slice(&solver.solve(&rhs, last.0.get(..off))?);
        }
        u[off..].copy_from_slice(w);

        let flux = a1.spmv(&u)?;
        let mut rhs = right.load().to_vec();
        for k in 0..m {
            rhs[roff + k] -= flux[off + k];
            if rhs_kind == DnRhs::WithLeftSource {
                rhs[roff + k] += f1[off + k];
            }
        }
        let wt = neumann.solve(&rhs, (!last.1.is_empty()).then_some(last.1.as_slice()))?;
        let next: Vec<f64> = w
            .iter()
            .zip(&wt[roff..])
            .map(|(a, b)| params.theta * a + (1.0 - params.theta) * b)
            .collect();

        let d = norm_inf(&next.iter().zip(w).map(|(a, b)| a - b).collect::<Vec<_>>());
        history.push(next);
        last = (u, wt);
        let d0 = *first.get_or_insert(d);
        let done = match params.stop_rule {
            StopRule::Absolute => d < params.stop_tol,
            StopRule::Relative => d0 == 0.0 || d < params.stop_tol * d0,
        };
        if done {
            converged = true;
            break;
        }
    }
    let reduction_rate = reduction_rate_from_history(&history, left.interface_mass()).ok();
    Ok(DDReport {
        iterations: history.len() - 1,
        interface_trace_history: history,
        solution_u: last.0,
        solution_w: last.1,
        reduction_rate,
        converged,
    })
}
