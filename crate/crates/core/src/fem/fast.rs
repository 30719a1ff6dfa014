use std::sync::Arc;

use rayon::prelude::*;
use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};

use super::grid::{GridSpec, Side};
use crate::error::{check_len, Result};
use crate::linalg::tridiag::thomas_solve;

/// Orthonormal DST-I of length `m` (the matrix `Φ_m`, which is its own
/// inverse), computed through a complex FFT of length `2(m + 1)`.
#[derive(Clone)]
pub struct SineTransform {
    m: usize,
    fft: Arc<dyn Fft<f64>>,
}

impl std::fmt::Debug for SineTransform {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SineTransform").field("m", &self.m).finish()
    }
}

impl SineTransform {
    pub fn new(m: usize) -> Self {
        let fft = FftPlanner::new().plan_fft_forward(2 * (m + 1));
        Self { m, fft }
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    /// In-place `x ← Φ_m x`.
    pub fn apply(&self, x: &mut [f64]) {
        let m = self.m;
        let len = 2 * (m + 1);
        let mut buf = vec![Complex::new(0.0, 0.0); len];
        for (k, v) in x.iter().enumerate() {
            buf[k + 1] = Complex::new(*v, 0.0);
            buf[len - k - 1] = Complex::new(-v, 0.0);
        }
        self.fft.process(&mut buf);
        let scale = -0.5 * (2.0 / (m + 1) as f64).sqrt();
        for (j, v) in x.iter_mut().enumerate() {
            *v = scale * buf[j + 1].im;
        }
    }
}

/// Direct solver for `A_h + γ Rᵀ M_Γ R` (or for the five-point matrix with
/// Dirichlet data on every side) on one subdomain.
///
/// All y-direction pieces of the matrix are diagonalised by `Φ_{2n−1}`; what
/// is left is one tridiagonal system across the columns per sine mode.
#[derive(Debug, Clone)]
pub struct FastSineSolver {
    columns: usize,
    transform: SineTransform,
    diag: Vec<Vec<f64>>,
}

impl FastSineSolver {
    /// Solver for `A_h + γ Rᵀ M_Γ R` (natural condition plus Robin term on Γ).
    pub fn robin(grid: &GridSpec, side: Side, gamma: f64) -> Self {
        let h = grid.h();
        Self::build(grid.n_interface(), grid.columns(side), |lam| {
            -(1.0 + 0.5 * lam) + gamma * (h - h * lam / 6.0)
        })
    }

    /// Solver for the five-point matrix on `columns` columns of height
    /// `2n − 1` with Dirichlet data all round (e.g. the interior block of a
    /// subdomain, which has one column fewer than the subdomain).
    pub fn dirichlet(grid: &GridSpec, columns: usize) -> Self {
        Self::build(grid.n_interface(), columns, |_| 0.0)
    }

    fn build(m: usize, columns: usize, last_shift: impl Fn(f64) -> f64) -> Self {
        let diag = (1..=m)
            .map(|j| {
                let lam = 4.0 * (j as f64 * std::f64::consts::PI / (2.0 * (m + 1) as f64)).sin().powi(2);
                let mut d = vec![2.0 + lam; columns];
                if let Some(last) = d.last_mut() {
                    *last += last_shift(lam);
                }
                d
            })
            .collect();
        Self {
            columns,
            transform: SineTransform::new(m),
            diag,
        }
    }

    pub fn dim(&self) -> usize {
        self.columns * self.transform.len()
    }

    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        check_len(self.dim(), b.len())?;
        let m = self.transform.len();
        let cols = self.columns;
        if m == 0 || cols == 0 {
            return Ok(Vec::new());
        }
        let mut x = b.to_vec();
        x.par_chunks_mut(m).for_each(|col| self.transform.apply(col));

        let mut modes = vec![0.0; x.len()];
        for c in 0..cols {
            for j in 0..m {
                modes[j * cols + c] = x[c * m + j];
            }
        }
        let off = vec![-1.0; cols.saturating_sub(1)];
        modes.par_chunks_mut(cols).enumerate().for_each(|(j, rhs)| {
            let mut work = vec![0.0; cols];
            thomas_solve(&off, &self.diag[j], &off, rhs, &mut work);
        });
        for c in 0..cols {
            for j in 0..m {
                x[c * m + j] = modes[j * cols + c];
            }
        }
        x.par_chunks_mut(m).for_each(|col| self.transform.apply(col));
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fem::{assemble_a0, SubdomainSystem};
    use crate::linalg::dense_lu_solve;

    #[test]
    fn transform_matches_sine_matrix() {
        for m in [1, 2, 5, 8] {
            let t = SineTransform::new(m);
            let x: Vec<f64> = (0..m).map(|k| (k as f64 + 0.3).cos()).collect();
            let mut y = x.clone();
            t.apply(&mut y);
            let s = (2.0 / (m + 1) as f64).sqrt();
            for j in 0..m {
                let direct: f64 = (0..m)
                    .map(|k| s * (((j + 1) * (k + 1)) as f64 * std::f64::consts::PI / (m + 1) as f64).sin() * x[k])
                    .sum();
                assert!((y[j] - direct).abs() < 1e-13);
            }
            t.apply(&mut y);
            for (u, v) in y.iter().zip(&x) {
                assert!((u - v).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn robin_solve_matches_lu() {
        for (n, side) in [(1, Side::Left), (3, Side::Left), (4, Side::Right)] {
            let g = GridSpec::new(n).unwrap();
            let s = SubdomainSystem::homogeneous(&g, side);
            for gamma in [0.0, 1.0, 37.5] {
                let b: Vec<f64> = (0..s.dim()).map(|k| (k as f64 * 0.7).sin()).collect();
                let x = FastSineSolver::robin(&g, side, gamma).solve(&b).unwrap();
                let y = dense_lu_solve(&s.robin_matrix(gamma).to_dense(), &b).unwrap();
                for (u, v) in x.iter().zip(&y) {
                    assert!((u - v).abs() < 1e-11, "n={n} gamma={gamma}");
                }
            }
        }
    }

    #[test]
    fn asymmetric_split_right_side() {
        let g = GridSpec::third_split(4).unwrap();
        let s = SubdomainSystem::homogeneous(&g, Side::Right);
        let b = vec![1.0; s.dim()];
        let x = FastSineSolver::robin(&g, Side::Right, 2.0).solve(&b).unwrap();
        let y = dense_lu_solve(&s.robin_matrix(2.0).to_dense(), &b).unwrap();
        assert!(crate::linalg::max_abs_diff(&x, &y) < 1e-11);
    }

    #[test]
    fn dirichlet_solve_matches_a0() {
        let g = GridSpec::new(3).unwrap();
        let a0 = assemble_a0(&g, Side::Left).to_dense();
        let b: Vec<f64> = (0..a0.rows()).map(|k| k as f64 - 4.0).collect();
        let x = FastSineSolver::dirichlet(&g, 3).solve(&b).unwrap();
        let y = dense_lu_solve(&a0, &b).unwrap();
        assert!(crate::linalg::max_abs_diff(&x, &y) < 1e-12);
    }
}
