use crate::dd::{DnRhs, InnerSolver};
use crate::fem::LoadRule;
use crate::operator::Coordinates;

/// Which report to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Table1,
    Table2,
    Table3,
    Spectrum,
    VonNeumann,
    Operator,
}

/// Inputs shared by every experiment. Fields a given report does not use are
/// ignored.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub table: TableKind,
    pub n_list: Vec<usize>,
    pub gamma1: f64,
    /// `γ₂ = gamma2_coeff / h`.
    pub gamma2_coeff: f64,
    pub theta_list: Vec<f64>,
    pub stop_tol: f64,
    pub max_iter: usize,
    /// `None` picks CG for small subdomains and the sine solver above
    /// [`FAST_SOLVER_THRESHOLD`] unknowns.
    pub inner: Option<InnerSolver>,
    pub load_rule: LoadRule,
    pub dn_rhs: DnRhs,
    pub coordinates: Coordinates,
    pub seed: u64,
}

/// Subdomain size above which the automatic inner solver is the sine solver.
pub const FAST_SOLVER_THRESHOLD: usize = 50_000;

/// `n` values behind the rows `h = 1/4, 1/12, …, 1/52`.
pub const TABLE1_N: [usize; 7] = [2, 6, 10, 14, 18, 22, 26];
/// `n` values behind the rows `h = 1/4, …, 1/44`.
pub const TABLE2_N: [usize; 6] = [2, 6, 10, 14, 18, 22];
/// `n` values behind the rows `h = 1/72, 1/288, 1/1152`.
pub const TABLE2_DEEP_N: [usize; 3] = [36, 144, 576];
/// `n` values behind the rows `h = 1/4, …, 1/36`.
pub const TABLE3_N: [usize; 5] = [2, 6, 10, 14, 18];
pub const TABLE3_THETA: [f64; 8] = [0.0, 0.25, 0.35, 0.4, 0.45, 0.5, 0.55, 0.75];

/// `θ = k/7`, `k = 0..6`.
pub fn sevenths() -> Vec<f64> {
    (0..7).map(|k| k as f64 / 7.0).collect()
}

impl ExperimentConfig {
    /// Settings of the published run for each report.
    pub fn defaults(table: TableKind) -> Self {
        let (n_list, theta_list, max_iter) = match table {
            TableKind::Table1 => (TABLE1_N.to_vec(), vec![3.0 / 7.0], 10_000),
            TableKind::Table2 => (TABLE2_N.to_vec(), sevenths(), 20_000),
            TableKind::Table3 => (TABLE3_N.to_vec(), TABLE3_THETA.to_vec(), 2_000),
            TableKind::Spectrum => (vec![1, 2, 4, 8, 16, 32, 64, 128, 256], vec![3.0 / 7.0], 0),
            TableKind::VonNeumann => (vec![10, 100], vec![], 0),
            TableKind::Operator => (vec![2, 4, 8, 16], vec![], 0),
        };
        Self {
            table,
            n_list,
            gamma1: 1.0,
            gamma2_coeff: 64.0,
            theta_list,
            stop_tol: 1e-11,
            max_iter,
            inner: None,
            load_rule: LoadRule::Interpolated,
            dn_rhs: DnRhs::AsWritten,
            coordinates: Coordinates::MassOrthonormal,
            seed: 20_240_501,
        }
    }

    /// Inner solver for a subdomain with `unknowns` entries.
    pub fn inner_for(&self, unknowns: usize) -> InnerSolver {
        self.inner.unwrap_or(if unknowns > FAST_SOLVER_THRESHOLD {
            InnerSolver::FastSine
        } else {
            InnerSolver::default()
        })
    }

    pub fn gamma2(&self, h: f64) -> f64 {
        self.gamma2_coeff / h
    }

    pub fn validate(&self) -> crate::Result<()> {
        use crate::Error;
        if self.n_list.is_empty() || self.n_list.contains(&0) {
            return Err(Error::InvalidArgument("n list must be non-empty and positive".into()));
        }
        if !(self.gamma1 > 0.0) || !(self.gamma2_coeff > 0.0) {
            return Err(Error::InvalidArgument("gamma coefficients must be positive".into()));
        }
        if self.theta_list.iter().any(|t| !(0.0..1.0).contains(t)) {
            return Err(Error::InvalidArgument("theta values must lie in [0, 1)".into()));
        }
        if !(self.stop_tol > 0.0) {
            return Err(Error::InvalidArgument("tolerance must be positive".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        for k in [
            TableKind::Table1,
            TableKind::Table2,
            TableKind::Table3,
            TableKind::Spectrum,
            TableKind::VonNeumann,
            TableKind::Operator,
        ] {
            ExperimentConfig::defaults(k).validate().unwrap();
        }
    }

    #[test]
    fn bad_values_rejected() {
        let base = ExperimentConfig::defaults(TableKind::Table1);
        let mut c = base.clone();
        c.n_list = vec![0];
        assert!(c.validate().is_err());
        let mut c = base.clone();
        c.theta_list = vec![1.0];
        assert!(c.validate().is_err());
        let mut c = base.clone();
        c.gamma1 = -1.0;
        assert!(c.validate().is_err());
        let mut c = base;
        c.stop_tol = 0.0;
        assert!(c.validate().is_err());
    }

    #[test]
    fn auto_solver_switches_on_size() {
        let c = ExperimentConfig::defaults(TableKind::Table2);
        assert_eq!(c.inner_for(100), InnerSolver::default());
        assert_eq!(c.inner_for(FAST_SOLVER_THRESHOLD + 1), InnerSolver::FastSine);
        assert_eq!(sevenths().len(), 7);
        assert_eq!(TABLE1_N.map(|n| 2 * n), [4, 12, 20, 28, 36, 44, 52]);
    }
}
