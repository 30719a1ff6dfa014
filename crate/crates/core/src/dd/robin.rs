use super::inner::PreparedSolve;
use super::params::{DDParams, StopRule};
use super::report::{reduction_rate_from_history, DDReport};
use crate::error::{check_len, Error, Result};
use crate::fem::{Side, SubdomainSystem};
use crate::linalg::norm_inf;

pub(crate) fn check_pair(left: &SubdomainSystem, right: &SubdomainSystem) -> Result<()> {
    if left.grid() != right.grid() || left.side() != Side::Left || right.side() != Side::Right {
        return Err(Error::InvalidArgument(
            "expected the left and right systems of one grid".into(),
        ));
    }
    Ok(())
}

/// One sweep of the Robin-Robin iteration.
pub(crate) struct RobinSweep<'a> {
    left: &'a SubdomainSystem,
    right: &'a SubdomainSystem,
    k1: PreparedSolve,
    k2: PreparedSolve,
    params: DDParams,
}

impl<'a> RobinSweep<'a> {
    pub fn new(left: &'a SubdomainSystem, right: &'a SubdomainSystem, params: &DDParams) -> Result<Self> {
        params.validate()?;
        check_pair(left, right)?;
        Ok(Self {
            left,
            right,
            k1: PreparedSolve::robin(left, params.gamma1, params.inner),
            k2: PreparedSolve::robin(right, params.gamma2, params.inner),
            params: *params,
        })
    }

    /// Steps (s1)–(s5): returns `(g₁^{m+1}, U, W)`. `prev` holds the last
    /// `(U, W)` as starting guesses for the subdomain solves.
    pub fn step(&self, g1: &[f64], prev: Option<(&[f64], &[f64])>) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>)> {
        let p = &self.params;
        let sum = p.gamma1 + p.gamma2;

        let mut rhs = self.left.interface_pairing(g1)?;
        rhs.iter_mut().zip(self.left.load()).for_each(|(r, f)| *r += f);
        let u = self.k1.solve(&rhs, prev.map(|p| p.0))?;
        let g2: Vec<f64> = g1.iter().zip(self.left.trace(&u)?).map(|(g, t)| -g + sum * t).collect();

        let mut rhs = self.right.interface_pairing(&g2)?;
        rhs.iter_mut().zip(self.right.load()).for_each(|(r, f)| *r += f);
        let w = self.k2.solve(&rhs, prev.map(|p| p.1))?;
        let next = g1
            .iter()
            .zip(g2.iter().zip(self.right.trace(&w)?))
            .map(|(g, (h, t))| p.theta * g + (1.0 - p.theta) * (-h + sum * t))
            .collect();
        Ok((next, u, w))
    }
}

/// Runs the Robin-Robin iteration from `g1_init` until the sup-norm of the
/// interface update drops below `params.stop_tol` (absolute or relative to
/// the first update, see [`StopRule`]) or `params.max_iter` sweeps are done.
pub fn robin_robin_solve(
    left: &SubdomainSystem,
    right: &SubdomainSystem,
    params: &DDParams,
    g1_init: &[f64],
) -> Result<DDReport> {
    check_len(left.grid().n_interface(), g1_init.len())?;
    let sweep = RobinSweep::new(left, right, params)?;
    let mut history = vec![g1_init.to_vec()];
    let mut first = None;
    let mut last = (Vec::new(), Vec::new());
    let mut converged = false;
    for _ in 0..params.max_iter {
        let g = history.last().expect("non-empty");
        let guess = (!last.0.is_empty()).then_some((last.0.as_slice(), last.1.as_slice()));
        let (next, u, w) = sweep.step(g, guess)?;
        let d = next.iter().zip(g).map(|(a, b)| a - b).collect::<Vec<_>>();
        let d = norm_inf(&d);
        history.push(next);
        last = (u, w);
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
