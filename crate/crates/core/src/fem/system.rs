use super::assembly::{
    apply_restriction, apply_restriction_adjoint, assemble_interface_mass, assemble_interface_stiffness, assemble_load,
    assemble_subdomain_stiffness, LoadRule,
};
use super::grid::{GridSpec, Side};
use crate::error::{check_len, Result};
use crate::linalg::{SparseMatrix, SymTridiagonal};

/// Everything one subdomain solve needs: `A_h`, `M_Γ`, `A_Γ` and `(f, v)_{Ω_i}`.
#[derive(Debug, Clone)]
pub struct SubdomainSystem {
    grid: GridSpec,
    side: Side,
    stiffness: SparseMatrix,
    interface_mass: SymTridiagonal,
    interface_stiffness: SymTridiagonal,
    load: Vec<f64>,
}

impl SubdomainSystem {
    pub fn assemble(grid: &GridSpec, side: Side, f: &dyn Fn(f64, f64) -> f64, rule: LoadRule) -> Self {
        Self {
            grid: *grid,
            side,
            stiffness: assemble_subdomain_stiffness(grid, side),
            interface_mass: assemble_interface_mass(grid),
            interface_stiffness: assemble_interface_stiffness(grid),
            load: assemble_load(grid, side, f, rule),
        }
    }

    /// System with `f ≡ 0`.
    pub fn homogeneous(grid: &GridSpec, side: Side) -> Self {
        Self::assemble(grid, side, &|_, _| 0.0, LoadRule::Interpolated)
    }

    /// Both halves of the split square.
    pub fn pair(grid: &GridSpec, f: &dyn Fn(f64, f64) -> f64, rule: LoadRule) -> (Self, Self) {
        (
            Self::assemble(grid, Side::Left, f, rule),
            Self::assemble(grid, Side::Right, f, rule),
        )
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn stiffness(&self) -> &SparseMatrix {
        &self.stiffness
    }

    pub fn interface_mass(&self) -> &SymTridiagonal {
        &self.interface_mass
    }

    pub fn interface_stiffness(&self) -> &SymTridiagonal {
        &self.interface_stiffness
    }

    pub fn load(&self) -> &[f64] {
        &self.load
    }

    pub fn dim(&self) -> usize {
        self.load.len()
    }

    pub fn interface_offset(&self) -> usize {
        self.grid.interface_offset(self.side)
    }

    /// Replaces the load vector.
    pub fn with_load(mut self, load: Vec<f64>) -> Result<Self> {
        check_len(self.dim(), load.len())?;
        self.load = load;
        Ok(self)
    }

    /// `A_h + γ Rᵀ M_Γ R`.
    pub fn robin_matrix(&self, gamma: f64) -> SparseMatrix {
        let off = self.interface_offset();
        let mut t = self.stiffness.triplets();
        let d = self.interface_mass.diag();
        let o = self.interface_mass.off();
        for (i, v) in d.iter().enumerate() {
            t.push((off + i, off + i, gamma * v));
        }
        for (i, v) in o.iter().enumerate() {
            t.push((off + i, off + i + 1, gamma * v));
            t.push((off + i + 1, off + i, gamma * v));
        }
        SparseMatrix::from_triplets(self.dim(), self.dim(), &t)
    }

    /// `Rᵀ M_Γ g`, the weak pairing `⟨g, v⟩` of interface data.
    pub fn interface_pairing(&self, g: &[f64]) -> Result<Vec<f64>> {
        let mg = self.interface_mass.matvec(g)?;
        apply_restriction_adjoint(&self.grid, self.side, &mg)
    }

    /// `R v`.
    pub fn trace<'a>(&self, v: &'a [f64]) -> Result<&'a [f64]> {
        apply_restriction(&self.grid, self.side, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{cg_solve, dense_lu_solve};

    #[test]
    fn robin_matrix_is_spd() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let g = GridSpec::new(4).unwrap();
        let s = SubdomainSystem::homogeneous(&g, Side::Left);
        assert_eq!(s.stiffness().max_asymmetry(), 0.0);
        for gamma in [1e-3, 1.0, 1e3] {
            let k = s.robin_matrix(gamma);
            assert_eq!(k.max_asymmetry(), 0.0);
            assert!(k.to_dense().cholesky().is_ok());
            for _ in 0..20 {
                let x: Vec<f64> = (0..s.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let kx = k.spmv(&x).unwrap();
                assert!(crate::linalg::dot(&kx, &x) > 0.0);
            }
            let b = vec![1.0; s.dim()];
            assert!(cg_solve(&k, &b, 1e-12, 1000).is_ok());
        }
    }

    #[test]
    fn cg_agrees_with_lu() {
        let g = GridSpec::new(2).unwrap();
        let s = SubdomainSystem::homogeneous(&g, Side::Right);
        let k = s.robin_matrix(1.0);
        let b = vec![1.0; s.dim()];
        let x = cg_solve(&k, &b, 1e-14, 100).unwrap().x;
        let y = dense_lu_solve(&k.to_dense(), &b).unwrap();
        for (u, v) in x.iter().zip(&y) {
            assert!((u - v).abs() < 1e-10);
        }
    }

    #[test]
    fn pairing_places_mass_product_on_interface() {
        let g = GridSpec::new(2).unwrap();
        let s = SubdomainSystem::homogeneous(&g, Side::Left);
        let v = s.interface_pairing(&[1.0, 1.0, 1.0]).unwrap();
        let h = g.h();
        assert_eq!(&v[..3], &[0.0; 3]);
        assert!((v[3] - 5.0 * h / 6.0).abs() < 1e-15);
        assert!((v[4] - h).abs() < 1e-15);
    }
}
