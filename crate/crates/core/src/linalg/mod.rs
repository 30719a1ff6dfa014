//! Small linear-algebra kernels: CSR storage, dense factorisations, conjugate
//! gradients, a cyclic Jacobi eigensolver and power iteration.

mod cg;
mod dense;
mod eigen;
mod power;
mod sparse;
pub(crate) mod tridiag;

pub use cg::{cg_solve, cg_solve_from, CgOutcome};
pub use dense::{dense_lu_solve, forward_substitution, DenseMatrix, LuFactors};
pub use eigen::{jacobi_symmetric_eigen, symmetric_matrix_function, SymmetricEigen};
pub use power::{power_spectral_radius, PowerOptions};
pub use sparse::SparseMatrix;
pub use tridiag::SymTridiagonal;

/// A square linear map applied as `y = A x`.
pub trait LinearOperator {
    fn dim(&self) -> usize;
    fn apply(&self, x: &[f64], y: &mut [f64]);
}

impl LinearOperator for DenseMatrix {
    fn dim(&self) -> usize {
        self.rows()
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = (0..self.cols()).map(|j| self.get(i, j) * x[j]).sum();
        }
    }
}

/// Wraps a closure as a [`LinearOperator`].
pub struct FnOperator<F> {
    dim: usize,
    f: F,
}

impl<F: Fn(&[f64], &mut [f64])> FnOperator<F> {
    pub fn new(dim: usize, f: F) -> Self {
        Self { dim, f }
    }
}

impl<F: Fn(&[f64], &mut [f64])> LinearOperator for FnOperator<F> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        (self.f)(x, y)
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn norm_inf(a: &[f64]) -> f64 {
    a.iter().fold(0.0, |m, v| m.max(v.abs()))
}

/// `max_i |a_i - b_i|`.
pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}
