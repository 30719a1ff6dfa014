use rayon::prelude::*;

use super::config::ExperimentConfig;
use super::manufactured::{exact_u, source_f};
use super::table::{fixed, h_label, Table};
use crate::dd::{robin_robin_solve, DDParams};
use crate::error::Result;
use crate::fem::{error_norms, ErrorNorms, GridSpec, Side, SubdomainSystem};

/// One mesh of the discretisation-error study.
#[derive(Debug, Clone, PartialEq)]
pub struct Table1Row {
    pub n: usize,
    pub h: f64,
    pub errors: ErrorNorms,
    /// Observed orders against the previous row, from the (unsquared) norms.
    pub l2_order: Option<f64>,
    pub h1_order: Option<f64>,
    pub iterations: usize,
    pub converged: bool,
}

/// Solves the test problem by the Robin-Robin iteration on every grid of the
/// configuration and measures `u_I − u_h`.
pub fn run_table1(config: &ExperimentConfig) -> Result<Vec<Table1Row>> {
    config.validate()?;
    let theta = config.theta_list.first().copied().unwrap_or(3.0 / 7.0);
    let mut rows: Vec<Table1Row> = config
        .n_list
        .par_iter()
        .map(|&n| {
            let grid = GridSpec::new(n)?;
            let h = grid.h();
            let (left, right) = SubdomainSystem::pair(&grid, &source_f, config.load_rule);
            let params = DDParams::new(config.gamma1, config.gamma2(h), theta)?
                .with_stop_tol(config.stop_tol)
                .with_max_iter(config.max_iter)
                .with_inner(config.inner_for(grid.subdomain_unknowns(Side::Left)));
            let report = robin_robin_solve(&left, &right, &params, &vec![0.0; grid.n_interface()])?;
            let errors = error_norms(&grid, &report.solution_u, &report.solution_w, &exact_u)?;
            Ok(Table1Row {
                n,
                h,
                errors,
                l2_order: None,
                h1_order: None,
                iterations: report.iterations,
                converged: report.converged,
            })
        })
        .collect::<Result<_>>()?;
    for k in 1..rows.len() {
        let (prev, cur) = (rows[k - 1].clone(), &mut rows[k]);
        let lh = (prev.h / cur.h).ln();
        cur.l2_order = Some((prev.errors.l2 / cur.errors.l2).ln() / lh);
        cur.h1_order = Some((prev.errors.h1_semi / cur.errors.h1_semi).ln() / lh);
    }
    Ok(rows)
}

/// Layout of the published table: squared error norms, their orders, and
/// the iteration count.
pub fn table1_table(rows: &[Table1Row]) -> Table {
    let mut t = Table::new(
        "Errors and Robin-Robin iteration counts",
        &["h", "||u_I-u_h||_L2^2", "h^n", "|u_I-u_h|_H1^2", "h^n", "#DD"],
    );
    for r in rows {
        let order = |o: Option<f64>| o.map(|v| fixed(v, 2)).unwrap_or_default();
        let count = if r.converged {
            r.iterations.to_string()
        } else {
            format!(">{}", r.iterations)
        };
        t.push(vec![
            h_label(r.n),
            fixed(r.errors.l2_squared(), 7),
            order(r.l2_order),
            fixed(r.errors.h1_semi_squared(), 6),
            order(r.h1_order),
            count,
        ]);
    }
    t.notes
        .push("Error columns hold squared norms; orders refer to the norms themselves.".into());
    t
}
