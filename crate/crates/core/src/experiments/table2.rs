use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::config::ExperimentConfig;
use super::table::{fixed, h_label, Table};
use crate::dd::{measured_reduction_rate, robin_robin_solve, DDParams, StopRule};
use crate::error::Result;
use crate::fem::{GridSpec, Side, SubdomainSystem};
use crate::spectral::{corollary_rate, reduction_spectrum};

/// Relative decrease of the interface update after which a rate run stops.
pub const RATE_STOP: f64 = 1e-30;

/// Measured and closed-form reduction rates for one `(h, θ)` cell.
#[derive(Debug, Clone, PartialEq)]
pub struct RateCell {
    pub n: usize,
    pub theta: f64,
    pub measured: Option<f64>,
    pub closed_form: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Reduction rate of the Robin-Robin iteration measured on the error
/// equation: `f ≡ 0`, a seeded random start, iteration until the update has
/// shrunk by [`RATE_STOP`], then the geometric mean of the last half of the
/// `L²(Γ)` contraction factors.
pub fn measure_rate(grid: &GridSpec, params: &DDParams, seed: u64) -> Result<(Option<f64>, usize, bool)> {
    let left = SubdomainSystem::homogeneous(grid, Side::Left);
    let right = SubdomainSystem::homogeneous(grid, Side::Right);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g0: Vec<f64> = (0..grid.n_interface()).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let p = params.with_stop_rule(StopRule::Relative).with_stop_tol(RATE_STOP);
    let report = robin_robin_solve(&left, &right, &p, &g0)?;
    let rate = measured_reduction_rate(&report, left.interface_mass()).ok();
    Ok((rate, report.iterations, report.converged))
}

pub fn run_table2(config: &ExperimentConfig) -> Result<Vec<Vec<RateCell>>> {
    config.validate()?;
    let cells: Vec<(usize, f64)> = config
        .n_list
        .iter()
        .flat_map(|&n| config.theta_list.iter().map(move |&t| (n, t)))
        .collect();
    let out: Vec<RateCell> = cells
        .par_iter()
        .map(|&(n, theta)| {
            let grid = GridSpec::new(n)?;
            let params = DDParams::new(config.gamma1, config.gamma2(grid.h()), theta)?
                .with_max_iter(config.max_iter)
                .with_inner(config.inner_for(grid.subdomain_unknowns(Side::Left)));
            let seed = config.seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
            let (measured, iterations, converged) = measure_rate(&grid, &params, seed)?;
            Ok(RateCell {
                n,
                theta,
                measured,
                closed_form: reduction_spectrum(n, &params).radius,
                iterations,
                converged,
            })
        })
        .collect::<Result<_>>()?;
    Ok(out
        .chunks(config.theta_list.len().max(1))
        .map(<[RateCell]>::to_vec)
        .collect())
}

fn theta_label(theta: f64) -> String {
    let k = theta * 7.0;
    if (k - k.round()).abs() < 1e-9 {
        format!("{}/7", k.round() as i64)
    } else {
        fixed(theta, 4)
    }
}

pub fn table2_table(rows: &[Vec<RateCell>], theta_list: &[f64]) -> Table {
    let mut headers = vec!["h\\theta".to_string()];
    headers.extend(theta_list.iter().map(|&t| theta_label(t)));
    let mut t = Table::new("Measured reduction rates", &[]);
    t.headers = headers;
    for row in rows {
        let mut cells = vec![row.first().map(|c| h_label(c.n)).unwrap_or_default()];
        cells.extend(
            row.iter()
                .map(|c| c.measured.map(|v| fixed(v, 3)).unwrap_or_else(|| "-".into())),
        );
        t.push(cells);
    }
    let mut bound = vec!["Guaranteed".to_string()];
    bound.extend(theta_list.iter().map(|&th| fixed(corollary_rate(th), 3)));
    t.push(bound);
    t
}
