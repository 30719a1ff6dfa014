use super::dense::DenseMatrix;
use crate::error::{Error, Result};

/// Eigen-decomposition `A = V diag(values) Vᵀ` with ascending eigenvalues;
/// eigenvectors are the columns of `vectors`.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: DenseMatrix,
}

impl SymmetricEigen {
    pub fn min(&self) -> f64 {
        self.values.first().copied().unwrap_or(f64::NAN)
    }

    pub fn max(&self) -> f64 {
        self.values.last().copied().unwrap_or(f64::NAN)
    }

    /// Rebuilds `V diag(f(λ)) Vᵀ`.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> DenseMatrix {
        let n = self.values.len();
        let fl: Vec<f64> = self.values.iter().map(|&l| f(l)).collect();
        let v = &self.vectors;
        DenseMatrix::from_fn(n, n, |i, j| (0..n).map(|k| v.get(i, k) * fl[k] * v.get(j, k)).sum())
    }
}

/// Cyclic Jacobi eigensolver for dense symmetric matrices.
///
/// Rotations are applied until the off-diagonal Frobenius mass drops below
/// `1e-15` of the total, which keeps `‖AV − VΛ‖∞` near machine precision.
pub fn jacobi_symmetric_eigen(a: &DenseMatrix) -> Result<SymmetricEigen> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: a.cols(),
        });
    }
    let n = a.rows();
    let asym = a.max_asymmetry();
    if asym > 1e-12 * a.norm_inf().max(1.0) {
        return Err(Error::NotSymmetric(asym));
    }
    let mut m = a.symmetrized();
    let mut v = DenseMatrix::identity(n);

    let total: f64 = m.as_slice().iter().map(|x| x * x).sum();
    const MAX_SWEEPS: usize = 100;
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += 2.0 * m.get(p, q).powi(2);
            }
        }
        if off <= 1e-30 * total || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = m.get(p, p);
                let aqq = m.get(q, q);
                let tau = (aqq - app) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let t = if tau == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m.get(k, p);
                    let mkq = m.get(k, q);
                    m.set(k, p, c * mkp - s * mkq);
                    m.set(k, q, s * mkp + c * mkq);
                }
                for k in 0..n {
                    let mpk = m.get(p, k);
                    let mqk = m.get(q, k);
                    m.set(p, k, c * mpk - s * mqk);
                    m.set(q, k, s * mpk + c * mqk);
                }
                for k in 0..n {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, c * vkp - s * vkq);
                    v.set(k, q, s * vkp + c * vkq);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m.get(i, i).total_cmp(&m.get(j, j)));
    let values = order.iter().map(|&i| m.get(i, i)).collect();
    let vectors = DenseMatrix::from_fn(n, n, |i, j| v.get(i, order[j]));
    Ok(SymmetricEigen { values, vectors })
}

/// `f(A) = V f(Λ) Vᵀ` for symmetric `A`.
pub fn symmetric_matrix_function(a: &DenseMatrix, f: impl Fn(f64) -> f64) -> Result<DenseMatrix> {
    Ok(jacobi_symmetric_eigen(a)?.reconstruct_with(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(a: &DenseMatrix, e: &SymmetricEigen) -> f64 {
        let av = a.matmul(&e.vectors).unwrap();
        let vl = e.vectors.matmul(&DenseMatrix::diagonal(&e.values)).unwrap();
        av.max_abs_diff(&vl)
    }

    #[test]
    fn diagonal_input() {
        let a = DenseMatrix::diagonal(&[3.0, 1.0, 2.0]);
        let e = jacobi_symmetric_eigen(&a).unwrap();
        assert_eq!(e.values, vec![1.0, 2.0, 3.0]);
        for j in 0..3 {
            let col = e.vectors.column(j);
            assert_eq!(col.iter().filter(|v| v.abs() == 1.0).count(), 1);
        }
    }

    #[test]
    fn swap_matrix() {
        let a = DenseMatrix::from_row_major(2, 2, vec![0.0, 1.0, 1.0, 0.0]).unwrap();
        let e = jacobi_symmetric_eigen(&a).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-15);
        assert!((e.values[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_asymmetric() {
        let a = DenseMatrix::from_row_major(2, 2, vec![1.0, 2.0, 2.1, 1.0]).unwrap();
        assert!(matches!(jacobi_symmetric_eigen(&a), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn random_symmetric_reconstruction() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let n = 12;
        let b = DenseMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0));
        let a = b.add(&b.transpose()).unwrap();
        let e = jacobi_symmetric_eigen(&a).unwrap();
        assert!(residual(&a, &e) <= 1e-10 * a.norm_inf());
        let vtv = e.vectors.transpose().matmul(&e.vectors).unwrap();
        assert!(vtv.max_abs_diff(&DenseMatrix::identity(n)) < 1e-10);
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn square_root_squares_back() {
        let a = DenseMatrix::from_row_major(3, 3, vec![4.0, 1.0, 0.0, 1.0, 4.0, 1.0, 0.0, 1.0, 4.0]).unwrap();
        let r = symmetric_matrix_function(&a, f64::sqrt).unwrap();
        assert!(r.matmul(&r).unwrap().max_abs_diff(&a) < 1e-13);
    }
}
