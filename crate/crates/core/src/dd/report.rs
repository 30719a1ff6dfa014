use crate::error::{Error, Result};
use crate::linalg::SymTridiagonal;

/// Outcome of a DD run.
#[derive(Debug, Clone, PartialEq)]
pub struct DDReport {
    /// Completed iterations.
    pub iterations: usize,
    /// Interface iterates, starting with the initial guess
    /// (`iterations + 1` entries).
    pub interface_trace_history: Vec<Vec<f64>>,
    /// Last left-subdomain solution.
    pub solution_u: Vec<f64>,
    /// Last right-subdomain solution.
    pub solution_w: Vec<f64>,
    /// Asymptotic contraction of the interface updates in `L²(Γ)`, when at
    /// least four iterations were recorded.
    pub reduction_rate: Option<f64>,
    pub converged: bool,
}

impl DDReport {
    /// Latest interface iterate.
    pub fn final_trace(&self) -> &[f64] {
        self.interface_trace_history.last().map(Vec::as_slice).unwrap_or(&[])
    }

    /// `‖g^{m+1} − g^m‖∞` for every iteration.
    pub fn update_norms(&self) -> Vec<f64> {
        self.interface_trace_history
            .windows(2)
            .map(|w| w[0].iter().zip(&w[1]).fold(0.0f64, |m, (a, b)| m.max((a - b).abs())))
            .collect()
    }
}

/// Geometric mean of `‖g^{m+1} − g^m‖ / ‖g^m − g^{m−1}‖` over the last half of
/// the recorded history, with `‖v‖ = √(vᵀ M_Γ v)`.
pub fn measured_reduction_rate(report: &DDReport, interface_mass: &SymTridiagonal) -> Result<f64> {
    reduction_rate_from_history(&report.interface_trace_history, interface_mass)
}

pub(crate) fn reduction_rate_from_history(history: &[Vec<f64>], mass: &SymTridiagonal) -> Result<f64> {
    if history.len() < 5 {
        return Err(Error::InvalidArgument(format!(
            "reduction rate needs at least 4 iterations, got {}",
            history.len().saturating_sub(1)
        )));
    }
    let norms: Vec<f64> = history
        .windows(2)
        .map(|w| {
            let d: Vec<f64> = w[1].iter().zip(&w[0]).map(|(a, b)| a - b).collect();
            mass.quadratic_form(&d).max(0.0).sqrt()
        })
        .collect();
    let ratios: Vec<f64> = norms.windows(2).map(|w| w[1] / w[0]).collect();
    let tail = &ratios[ratios.len() / 2..];
    if tail.iter().any(|r| !r.is_finite() || *r == 0.0) {
        return Ok(0.0);
    }
    let mean_log = tail.iter().map(|r| r.ln()).sum::<f64>() / tail.len() as f64;
    Ok(mean_log.exp())
}
