use super::params::DDParams;
use super::robin::check_pair;
use crate::error::Result;
use crate::fem::SubdomainSystem;
use crate::linalg::DenseMatrix;

// C_γ = −I + (γ₁ + γ₂) R (A_h + γ Rᵀ M_Γ R)⁻¹ Rᵀ M_Γ by dense LU.
fn exchange_matrix(system: &SubdomainSystem, gamma: f64, sum: f64) -> Result<DenseMatrix> {
    let lu = system.robin_matrix(gamma).to_dense().lu()?;
    let m = system.grid().n_interface();
    let off = system.interface_offset();
    let mut c = DenseMatrix::zeros(m, m);
    for k in 0..m {
        let mut e = vec![0.0; m];
        e[k] = 1.0;
        let x = lu.solve(&system.interface_pairing(&e)?)?;
        let mut col: Vec<f64> = x[off..].iter().map(|v| sum * v).collect();
        col[k] -= 1.0;
        c.set_column(k, &col);
    }
    Ok(c)
}

/// Dense matrix of the map `g₁^m ↦ g₁^{m+1}` for `f ≡ 0`:
/// `θI + (1 − θ) C_{γ₂} C_{γ₁}`.
pub fn error_propagation_matrix(
    left: &SubdomainSystem,
    right: &SubdomainSystem,
    params: &DDParams,
) -> Result<DenseMatrix> {
    params.validate()?;
    check_pair(left, right)?;
    let sum = params.gamma1 + params.gamma2;
    let c1 = exchange_matrix(left, params.gamma1, sum)?;
    let c2 = exchange_matrix(right, params.gamma2, sum)?;
    Ok(c2.matmul(&c1)?.scale(1.0 - params.theta).shift(params.theta))
}
