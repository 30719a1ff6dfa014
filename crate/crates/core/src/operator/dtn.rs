use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fem::{FastSineSolver, SubdomainSystem};
use crate::linalg::{forward_substitution, jacobi_symmetric_eigen, DenseMatrix, SymmetricEigen};

/// Inner product in which the interface operators are expressed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Coordinates {
    /// Congruence by the inverse Cholesky factor of `M_Γ`, so that the Robin
    /// term `γ M_Γ` becomes `γ I`.
    #[default]
    MassOrthonormal,
    /// Raw nodal coordinates; the Robin term is taken as `γ I`.
    Euclidean,
}

/// Discrete Dirichlet-to-Neumann operator of one subdomain.
#[derive(Debug, Clone)]
pub struct DtNOperator {
    pub matrix: DenseMatrix,
    pub min_eig: f64,
    pub max_eig: f64,
    pub coordinates: Coordinates,
    eigen: SymmetricEigen,
}

impl DtNOperator {
    pub fn from_matrix(matrix: DenseMatrix, coordinates: Coordinates) -> Result<Self> {
        let eigen = jacobi_symmetric_eigen(&matrix)?;
        if eigen.min() <= 0.0 {
            return Err(Error::Precondition(format!(
                "interface operator is not positive definite (min eigenvalue {:e})",
                eigen.min()
            )));
        }
        Ok(Self {
            min_eig: eigen.min(),
            max_eig: eigen.max(),
            matrix: matrix.symmetrized(),
            coordinates,
            eigen,
        })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn eigen(&self) -> &SymmetricEigen {
        &self.eigen
    }

    /// `f(S)` through the eigendecomposition.
    pub fn function(&self, f: impl Fn(f64) -> f64) -> DenseMatrix {
        self.eigen.reconstruct_with(f)
    }
}

/// Schur complement `S = A_ΓΓ − A_ΓI A_II⁻¹ A_IΓ` of the subdomain stiffness,
/// in the nodal basis.
pub fn schur_complement(system: &SubdomainSystem) -> Result<DenseMatrix> {
    let grid = system.grid();
    let off = system.interface_offset();
    let m = grid.n_interface();
    let a = system.stiffness();
    let mut s = a.submatrix(off..off + m, off..off + m).to_dense();
    if off == 0 {
        return Ok(s);
    }
    let a_ig = a.submatrix(0..off, off..off + m);
    let a_gi = a.submatrix(off..off + m, 0..off);
    let interior = FastSineSolver::dirichlet(grid, grid.columns(system.side()) - 1);
    let columns: Vec<Vec<f64>> = (0..m)
        .into_par_iter()
        .map(|k| {
            let mut e = vec![0.0; m];
            e[k] = 1.0;
            let x = interior.solve(&a_ig.spmv(&e)?)?;
            a_gi.spmv(&x)
        })
        .collect::<Result<_>>()?;
    for (k, col) in columns.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            s.set(i, k, s.get(i, k) - v);
        }
    }
    Ok(s.symmetrized())
}

/// The DtN operator of a subdomain in the requested coordinates.
pub fn dtn_schur(system: &SubdomainSystem, coordinates: Coordinates) -> Result<DtNOperator> {
    let s = schur_complement(system)?;
    let matrix = match coordinates {
        Coordinates::Euclidean => s,
        Coordinates::MassOrthonormal => {
            let l = system.interface_mass().to_dense().cholesky()?;
            let m = s.rows();
            // X = L⁻¹ S, then Ŝ = L⁻¹ Xᵀ (S symmetric)
            let mut x = DenseMatrix::zeros(m, m);
            for k in 0..m {
                x.set_column(k, &forward_substitution(&l, &s.column(k)));
            }
            let xt = x.transpose();
            let mut out = DenseMatrix::zeros(m, m);
            for k in 0..m {
                out.set_column(k, &forward_substitution(&l, &xt.column(k)));
            }
            out.symmetrized()
        }
    };
    DtNOperator::from_matrix(matrix, coordinates)
}
