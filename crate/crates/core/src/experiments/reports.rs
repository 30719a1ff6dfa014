use rayon::prelude::*;

use super::config::ExperimentConfig;
use super::table::{fixed, Table};
use crate::dd::DDParams;
use crate::error::Result;
use crate::fem::{GridSpec, Side, SubdomainSystem};
use crate::operator::{dtn_schur, iteration_spectrum, recommend_params};
use crate::spectral::{von_neumann_advisor, von_neumann_rho};

/// Advisor output for one cut-off `K` and the worst mode it admits.
#[derive(Debug, Clone, PartialEq)]
pub struct VonNeumannRow {
    pub big_k: f64,
    pub gamma1: f64,
    pub gamma2: f64,
    pub theta: f64,
    pub bound: f64,
    /// `max_{k = 1..K} |ρ(k)|` with the advised parameters.
    pub worst_mode: f64,
}

pub fn von_neumann_row(big_k: usize, gamma1: f64) -> VonNeumannRow {
    let k = big_k as f64;
    let a = von_neumann_advisor(k, gamma1);
    let worst_mode = (1..=big_k)
        .map(|m| von_neumann_rho(m as f64, gamma1, a.gamma2, a.theta).abs())
        .fold(0.0, f64::max);
    VonNeumannRow {
        big_k: k,
        gamma1,
        gamma2: a.gamma2,
        theta: a.theta,
        bound: a.bound,
        worst_mode,
    }
}

pub fn run_von_neumann(config: &ExperimentConfig) -> Result<Vec<VonNeumannRow>> {
    config.validate()?;
    Ok(config
        .n_list
        .iter()
        .map(|&k| von_neumann_row(k, config.gamma1))
        .collect())
}

pub fn von_neumann_table(rows: &[VonNeumannRow]) -> Table {
    let mut t = Table::new(
        "Fourier-mode parameter advice",
        &["K", "gamma1", "gamma2", "theta", "bound", "max_k|rho|"],
    );
    for r in rows {
        t.push(vec![
            fixed(r.big_k, 0),
            fixed(r.gamma1, 6),
            fixed(r.gamma2, 6),
            fixed(r.theta, 6),
            fixed(r.bound, 6),
            fixed(r.worst_mode, 6),
        ]);
    }
    t
}

/// Interface split used by the operator report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Split {
    Half,
    Third,
    TwoThirds,
}

impl Split {
    pub fn grid(self, n: usize) -> Result<GridSpec> {
        match self {
            Split::Half => GridSpec::new(n),
            Split::Third => GridSpec::third_split(n),
            Split::TwoThirds => {
                let g = GridSpec::third_split(n)?;
                GridSpec::with_interface(n, 2 * n - g.interface_column())
            }
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Split::Half => "x=1/2",
            Split::Third => "x~1/3",
            Split::TwoThirds => "x~2/3",
        }
    }
}

/// Parameters, equivalence constants and spectral radius of `R` for one
/// decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorRow {
    pub n: usize,
    pub split: Split,
    /// `"extremes"`: `γ₁ = λ_min`, `γ₂ = λ_max`, `θ = 1/3` (symmetric split
    /// only); `"recommended"`: the (A2) rule with `θ = (2t − 1)/(2t + 1)`.
    pub rule: &'static str,
    pub gamma1: f64,
    pub gamma2: f64,
    pub theta: f64,
    pub s: f64,
    pub t: f64,
    pub radius: f64,
    pub bound: f64,
}

fn operator_rows(n: usize, split: Split, config: &ExperimentConfig) -> Result<Vec<OperatorRow>> {
    let grid = split.grid(n)?;
    let s1 = dtn_schur(&SubdomainSystem::homogeneous(&grid, Side::Left), config.coordinates)?;
    let s2 = dtn_schur(&SubdomainSystem::homogeneous(&grid, Side::Right), config.coordinates)?;
    let radius = |p: &DDParams| -> Result<f64> {
        Ok(iteration_spectrum(&s1, &s2, p)?
            .iter()
            .fold(0.0f64, |m, v| m.max(v.abs())))
    };
    let rec = recommend_params(&s1, &s2)?;
    let mut rows = Vec::new();
    if split == Split::Half {
        let p = DDParams::new(s1.min_eig, s1.max_eig, 1.0 / 3.0)?;
        rows.push(OperatorRow {
            n,
            split,
            rule: "extremes",
            gamma1: p.gamma1,
            gamma2: p.gamma2,
            theta: p.theta,
            s: rec.bounds.s,
            t: rec.bounds.t,
            radius: radius(&p)?,
            bound: 1.0 / 3.0,
        });
    }
    rows.push(OperatorRow {
        n,
        split,
        rule: "recommended",
        gamma1: rec.params.gamma1,
        gamma2: rec.params.gamma2,
        theta: rec.params.theta,
        s: rec.bounds.s,
        t: rec.bounds.t,
        radius: radius(&rec.params)?,
        bound: rec.bound,
    });
    Ok(rows)
}

pub fn run_operator(config: &ExperimentConfig) -> Result<Vec<OperatorRow>> {
    config.validate()?;
    let jobs: Vec<(usize, Split)> = config
        .n_list
        .iter()
        .flat_map(|&n| [Split::Half, Split::Third, Split::TwoThirds].map(|s| (n, s)))
        .collect();
    let rows: Vec<Vec<OperatorRow>> = jobs
        .par_iter()
        .map(|&(n, s)| operator_rows(n, s, config))
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().flatten().collect())
}

pub fn operator_table(rows: &[OperatorRow]) -> Table {
    let mut t = Table::new(
        "Interface operator analysis",
        &[
            "n", "split", "rule", "gamma1", "gamma2", "theta", "s", "t", "radius", "bound",
        ],
    );
    for r in rows {
        t.push(vec![
            r.n.to_string(),
            r.split.label().into(),
            r.rule.into(),
            fixed(r.gamma1, 6),
            fixed(r.gamma2, 6),
            fixed(r.theta, 6),
            fixed(r.s, 6),
            fixed(r.t, 6),
            fixed(r.radius, 6),
            fixed(r.bound, 6),
        ]);
    }
    t
}
