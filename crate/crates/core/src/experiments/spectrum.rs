use super::config::ExperimentConfig;
use super::table::{fixed, sci, Table};
use crate::dd::DDParams;
use crate::error::Result;
use crate::spectral::{all_mode_coefficients, corollary_rate};

/// One mode of one grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumRow {
    pub n: usize,
    pub theta: f64,
    pub j: usize,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub rate: f64,
}

/// Largest `|θ + (1 − θ)c_j|` for one grid and relaxation.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumSummary {
    pub n: usize,
    pub theta: f64,
    pub radius: f64,
    pub bound: f64,
    pub within_bound: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub modes: Vec<SpectrumRow>,
    pub summaries: Vec<SpectrumSummary>,
}

pub fn run_spectrum(config: &ExperimentConfig) -> Result<SpectrumReport> {
    config.validate()?;
    let mut modes = Vec::new();
    let mut summaries = Vec::new();
    for &n in &config.n_list {
        let h = 1.0 / (2 * n) as f64;
        let coeffs = all_mode_coefficients(n);
        for &theta in &config.theta_list {
            let p = DDParams::new(config.gamma1, config.gamma2(h), theta)?;
            let mut radius: f64 = 0.0;
            for m in &coeffs {
                let c = m.c(p.gamma1, p.gamma2);
                let rate = theta + (1.0 - theta) * c;
                radius = radius.max(rate.abs());
                modes.push(SpectrumRow {
                    n,
                    theta,
                    j: m.j,
                    a: m.a,
                    b: m.b,
                    c,
                    rate,
                });
            }
            let bound = corollary_rate(theta);
            summaries.push(SpectrumSummary {
                n,
                theta,
                radius,
                bound,
                within_bound: radius <= bound + 1e-12,
            });
        }
    }
    Ok(SpectrumReport { modes, summaries })
}

pub fn spectrum_table(report: &SpectrumReport) -> Table {
    let mut t = Table::new(
        "Interface error modes",
        &["n", "theta", "j", "a_j", "b_j", "c_j", "theta+(1-theta)c_j"],
    );
    for r in &report.modes {
        t.push(vec![
            r.n.to_string(),
            fixed(r.theta, 6),
            r.j.to_string(),
            sci(r.a),
            sci(r.b),
            sci(r.c),
            sci(r.rate),
        ]);
    }
    t
}

pub fn spectrum_summary_table(report: &SpectrumReport) -> Table {
    let mut t = Table::new("Spectral radius per grid", &["n", "theta", "radius", "bound", "within"]);
    for s in &report.summaries {
        t.push(vec![
            s.n.to_string(),
            fixed(s.theta, 6),
            fixed(s.radius, 6),
            fixed(s.bound, 6),
            s.within_bound.to_string(),
        ]);
    }
    t
}
