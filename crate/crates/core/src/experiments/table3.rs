use rayon::prelude::*;

use super::config::ExperimentConfig;
use super::manufactured::source_f;
use super::table::{h_label, Table};
use crate::dd::{dirichlet_neumann_solve, DDParams};
use crate::error::Result;
use crate::fem::{GridSpec, Side, SubdomainSystem};

/// Dirichlet-Neumann iteration count for one `(h, θ)` cell.
#[derive(Debug, Clone, PartialEq)]
pub struct DnCell {
    pub n: usize,
    pub theta: f64,
    pub iterations: usize,
    pub converged: bool,
}

pub fn run_table3(config: &ExperimentConfig) -> Result<Vec<Vec<DnCell>>> {
    config.validate()?;
    let cells: Vec<(usize, f64)> = config
        .n_list
        .iter()
        .flat_map(|&n| config.theta_list.iter().map(move |&t| (n, t)))
        .collect();
    let out: Vec<DnCell> = cells
        .par_iter()
        .map(|&(n, theta)| {
            let grid = GridSpec::new(n)?;
            let (left, right) = SubdomainSystem::pair(&grid, &source_f, config.load_rule);
            let params = DDParams::relaxation(theta)?
                .with_stop_tol(config.stop_tol)
                .with_max_iter(config.max_iter)
                .with_inner(config.inner_for(grid.subdomain_unknowns(Side::Left)));
            let rep = dirichlet_neumann_solve(&left, &right, &params, &vec![0.0; grid.n_interface()], config.dn_rhs)?;
            Ok(DnCell {
                n,
                theta,
                iterations: rep.iterations,
                converged: rep.converged,
            })
        })
        .collect::<Result<_>>()?;
    Ok(out
        .chunks(config.theta_list.len().max(1))
        .map(<[DnCell]>::to_vec)
        .collect())
}

pub fn table3_table(rows: &[Vec<DnCell>], theta_list: &[f64]) -> Table {
    let mut t = Table::new("Dirichlet-Neumann iteration counts", &[]);
    t.headers = std::iter::once("h\\theta".to_string())
        .chain(theta_list.iter().map(|v| format!("{v}")))
        .collect();
    for row in rows {
        let mut cells = vec![row.first().map(|c| h_label(c.n)).unwrap_or_default()];
        cells.extend(row.iter().map(|c| {
            if c.converged {
                c.iterations.to_string()
            } else {
                format!(">{}", c.iterations)
            }
        }));
        t.push(cells);
    }
    if rows.iter().flatten().any(|c| !c.converged) {
        t.notes
            .push("'>N': stopped at the iteration cap without meeting the tolerance.".into());
    }
    t
}
