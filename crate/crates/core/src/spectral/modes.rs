use std::f64::consts::PI;

use rayon::prelude::*;

use crate::dd::DDParams;
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;

fn check_index(i: usize, m: usize) -> Result<()> {
    if i == 0 || i > m {
        Err(Error::InvalidArgument(format!("mode index {i} outside 1..={m}")))
    } else {
        Ok(())
    }
}

/// `λ_i^{(m)} = 4 sin²(iπ / (2(m + 1)))`, eigenvalues of `tridiag(−1, 2, −1)`
/// of size `m`.
pub fn fd_eigenvalue(i: usize, m: usize) -> Result<f64> {
    check_index(i, m)?;
    Ok(fd_eig(i, m))
}

fn fd_eig(i: usize, m: usize) -> f64 {
    4.0 * (i as f64 * PI / (2.0 * (m + 1) as f64)).sin().powi(2)
}

/// `φ_i^{(m)}` with entries `√(2/(m+1)) sin(ikπ/(m+1))`, `k = 1..m`.
pub fn sine_basis_vector(i: usize, m: usize) -> Result<Vec<f64>> {
    check_index(i, m)?;
    let s = (2.0 / (m + 1) as f64).sqrt();
    Ok((1..=m)
        .map(|k| s * ((i * k) as f64 * PI / (m + 1) as f64).sin())
        .collect())
}

/// `Φ_m`, with `φ_i^{(m)}` as row `i − 1`. Symmetric and orthogonal.
pub fn sine_basis(m: usize) -> DenseMatrix {
    let s = (2.0 / (m + 1) as f64).sqrt();
    DenseMatrix::from_fn(m, m, |i, k| {
        s * (((i + 1) * (k + 1)) as f64 * PI / (m + 1) as f64).sin()
    })
}

fn kahan_sum(mut terms: Vec<f64>) -> f64 {
    terms.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
    let mut sum = 0.0;
    let mut comp = 0.0;
    for t in terms {
        let y = t - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    sum
}

/// `λ̃_j = (2/(n+1)) Σ_i sin²(iπ/(n+1)) / (λ_i^{(n)} + λ_j^{(2n−1)})`, the
/// eigenvalues of `R A₀⁻¹ Rᵀ` in the sine basis.
pub fn tilde_lambda(j: usize, n: usize) -> Result<f64> {
    check_index(j, 2 * n - 1)?;
    Ok(tilde(j, n))
}

fn tilde(j: usize, n: usize) -> f64 {
    let lj = fd_eig(j, 2 * n - 1);
    let terms = (1..=n)
        .map(|i| (i as f64 * PI / (n + 1) as f64).sin().powi(2) / (fd_eig(i, n) + lj))
        .collect();
    2.0 / (n + 1) as f64 * kahan_sum(terms)
}

/// Per-mode quantities on the interface of the grid with parameter `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeCoefficients {
    pub j: usize,
    pub n: usize,
    /// `λ_j^{(2n−1)}`.
    pub lambda_fd: f64,
    pub tilde_lambda: f64,
    pub a: f64,
    pub b: f64,
}

impl ModeCoefficients {
    pub fn h(&self) -> f64 {
        1.0 / (2 * self.n) as f64
    }

    /// Eigenvalue of `M_Γ`: `h − (h/6)λ_j`.
    pub fn lambda_mass(&self) -> f64 {
        let h = self.h();
        h - h * self.lambda_fd / 6.0
    }

    /// Eigenvalue of `A_Γ`: `1 + λ_j/2`.
    pub fn lambda_stiffness(&self) -> f64 {
        1.0 + 0.5 * self.lambda_fd
    }

    /// `c_j` for the given Robin parameters.
    pub fn c(&self, gamma1: f64, gamma2: f64) -> f64 {
        cj_eigenvalue(self, gamma1, gamma2)
    }
}

/// `a_j = λ_{M_Γ,j} λ̃_j` and `b_j = 1 − λ_{A_Γ,j} λ̃_j`.
pub fn mode_coefficients(j: usize, n: usize) -> Result<ModeCoefficients> {
    check_index(j, 2 * n - 1)?;
    let lambda_fd = fd_eig(j, 2 * n - 1);
    let t = tilde(j, n);
    let h = 1.0 / (2 * n) as f64;
    Ok(ModeCoefficients {
        j,
        n,
        lambda_fd,
        tilde_lambda: t,
        a: (h - h * lambda_fd / 6.0) * t,
        b: 1.0 - (1.0 + 0.5 * lambda_fd) * t,
    })
}

/// Mode coefficients for `j = 1..2n−1`.
pub fn all_mode_coefficients(n: usize) -> Vec<ModeCoefficients> {
    if n == 0 {
        return Vec::new();
    }
    (1..2 * n)
        .into_par_iter()
        .map(|j| mode_coefficients(j, n).expect("index in range"))
        .collect()
}

/// `c_j = (γ₁a − b)/(γ₁a + b) · (γ₂a − b)/(γ₂a + b)`.
pub fn cj_eigenvalue(coeff: &ModeCoefficients, gamma1: f64, gamma2: f64) -> f64 {
    let (a, b) = (coeff.a, coeff.b);
    (gamma1 * a - b) / (gamma1 * a + b) * ((gamma2 * a - b) / (gamma2 * a + b))
}

/// Eigenvalues `θ + (1 − θ)c_j` of the one-step interface error map.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionSpectrum {
    pub values: Vec<f64>,
    pub radius: f64,
}

pub fn reduction_spectrum(n: usize, params: &DDParams) -> ReductionSpectrum {
    let values: Vec<f64> = all_mode_coefficients(n)
        .iter()
        .map(|m| params.theta + (1.0 - params.theta) * m.c(params.gamma1, params.gamma2))
        .collect();
    let radius = values.iter().fold(0.0f64, |r, v| r.max(v.abs()));
    ReductionSpectrum { values, radius }
}

/// The sequence `3a_j − b_j` and the bounds it is expected to satisfy.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundMargins {
    pub n: usize,
    pub margins: Vec<f64>,
    pub strictly_decreasing: bool,
    /// `3a₁ − b₁ < −7h²/16`.
    pub below_quadratic: bool,
    /// `3a₁ − b₁ < −0.049h`; only evaluated for `n ≥ 11`.
    pub below_linear: Option<bool>,
}

pub fn bound_margins(n: usize) -> BoundMargins {
    let margins: Vec<f64> = all_mode_coefficients(n).iter().map(|m| 3.0 * m.a - m.b).collect();
    let h = 1.0 / (2 * n.max(1)) as f64;
    let first = margins.first().copied().unwrap_or(f64::NAN);
    BoundMargins {
        n,
        strictly_decreasing: margins.windows(2).all(|w| w[1] < w[0]),
        below_quadratic: first < -7.0 * h * h / 16.0,
        below_linear: (n >= 11).then_some(first < -0.049 * h),
        margins,
    }
}
