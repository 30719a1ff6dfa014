use super::dense::DenseMatrix;
use crate::error::{check_len, Result};

/// Symmetric tridiagonal matrix stored by its diagonal and first off-diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl SymTridiagonal {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        assert_eq!(off.len() + 1, diag.len().max(1), "off-diagonal length must be n-1");
        Self { diag, off }
    }

    /// Toeplitz matrix with constant diagonal `d` and off-diagonal `o`.
    pub fn toeplitz(n: usize, d: f64, o: f64) -> Self {
        Self::new(vec![d; n], vec![o; n.saturating_sub(1)])
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn off(&self) -> &[f64] {
        &self.off
    }

    pub fn matvec(&self, x: &[f64]) -> Result<Vec<f64>> {
        check_len(self.dim(), x.len())?;
        let n = self.dim();
        Ok((0..n)
            .map(|i| {
                let mut s = self.diag[i] * x[i];
                if i > 0 {
                    s += self.off[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    s += self.off[i] * x[i + 1];
                }
                s
            })
            .collect())
    }

    /// `xᵀ A x`.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        self.matvec(x).map(|y| super::dot(&y, x)).unwrap_or(f64::NAN)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(
            self.diag.iter().map(|v| v * s).collect(),
            self.off.iter().map(|v| v * s).collect(),
        )
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let n = self.dim();
        DenseMatrix::from_fn(n, n, |i, j| {
            if i == j {
                self.diag[i]
            } else if i + 1 == j {
                self.off[i]
            } else if j + 1 == i {
                self.off[j]
            } else {
                0.0
            }
        })
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.matvec(&vec![1.0; self.dim()]).expect("length matches")
    }
}

/// Thomas algorithm for a general tridiagonal system with sub-diagonal `lower`,
/// diagonal `diag` and super-diagonal `upper`. No pivoting; intended for
/// diagonally dominant or SPD systems.
pub(crate) fn thomas_solve(lower: &[f64], diag: &[f64], upper: &[f64], rhs: &mut [f64], work: &mut [f64]) {
    let n = diag.len();
    if n == 0 {
        return;
    }
    let mut beta = diag[0];
    rhs[0] /= beta;
    for i in 1..n {
        work[i] = upper[i - 1] / beta;
        beta = diag[i] - lower[i - 1] * work[i];
        rhs[i] = (rhs[i] - lower[i - 1] * rhs[i - 1]) / beta;
    }
    for i in (0..n - 1).rev() {
        rhs[i] -= work[i + 1] * rhs[i + 1];
    }
}
