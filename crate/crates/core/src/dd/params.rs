use crate::error::{Error, Result};

/// Linear solver used for every subdomain solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InnerSolver {
    /// Conjugate gradients to the given relative residual.
    Cg { tol: f64 },
    /// Separable sine-transform solver (exact up to rounding).
    FastSine,
}

impl Default for InnerSolver {
    fn default() -> Self {
        InnerSolver::Cg { tol: 1e-14 }
    }
}

/// How the interface update is compared against `stop_tol`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StopRule {
    /// `‖g^{m+1} − g^m‖∞ < stop_tol`.
    #[default]
    Absolute,
    /// `‖g^{m+1} − g^m‖∞ < stop_tol · ‖g^1 − g^0‖∞`.
    Relative,
}

/// Parameters `(γ₁, γ₂, θ)` of the Robin-Robin iteration plus stopping
/// controls. The Dirichlet-Neumann iteration only reads `theta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DDParams {
    pub gamma1: f64,
    pub gamma2: f64,
    pub theta: f64,
    pub stop_tol: f64,
    pub max_iter: usize,
    pub stop_rule: StopRule,
    pub inner: InnerSolver,
}

impl DDParams {
    pub fn new(gamma1: f64, gamma2: f64, theta: f64) -> Result<Self> {
        let p = Self {
            gamma1,
            gamma2,
            theta,
            stop_tol: 1e-11,
            max_iter: 10_000,
            stop_rule: StopRule::Absolute,
            inner: InnerSolver::default(),
        };
        p.validate()?;
        Ok(p)
    }

    /// `γ₁ = 1`, `γ₂ = 64/h`, `θ = 3/7`.
    pub fn theorem(h: f64) -> Self {
        Self::new(1.0, 64.0 / h, 3.0 / 7.0).expect("valid constants")
    }

    /// Relaxation-only parameters for the Dirichlet-Neumann iteration.
    pub fn relaxation(theta: f64) -> Result<Self> {
        Self::new(1.0, 1.0, theta)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.gamma1 > 0.0 && self.gamma1.is_finite()) || !(self.gamma2 > 0.0 && self.gamma2.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "gamma1 and gamma2 must be positive (got {}, {})",
                self.gamma1, self.gamma2
            )));
        }
        if !(0.0..1.0).contains(&self.theta) {
            return Err(Error::InvalidArgument(format!(
                "theta must lie in [0, 1) (got {})",
                self.theta
            )));
        }
        if !(self.stop_tol > 0.0) {
            return Err(Error::InvalidArgument("stop_tol must be positive".into()));
        }
        Ok(())
    }

    pub fn with_theta(mut self, theta: f64) -> Result<Self> {
        self.theta = theta;
        self.validate()?;
        Ok(self)
    }

    pub fn with_stop_tol(mut self, tol: f64) -> Self {
        self.stop_tol = tol;
        self
    }

    pub fn with_max_iter(mut self, max_iter: usize) -> Self {
        self.max_iter = max_iter;
        self
    }

    pub fn with_stop_rule(mut self, rule: StopRule) -> Self {
        self.stop_rule = rule;
        self
    }

    pub fn with_inner(mut self, inner: InnerSolver) -> Self {
        self.inner = inner;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(DDParams::new(1.0, 2.0, 0.0).is_ok());
        assert!(DDParams::new(0.0, 2.0, 0.5).is_err());
        assert!(DDParams::new(1.0, -2.0, 0.5).is_err());
        assert!(DDParams::new(1.0, 2.0, 1.0).is_err());
        assert!(DDParams::new(1.0, 2.0, -0.1).is_err());
        let p = DDParams::theorem(0.25);
        assert_eq!(p.gamma2, 256.0);
        assert_eq!(p.stop_tol, 1e-11);
    }
}
