//! Closed-form interface spectra checked against assembled matrices.

use robin_dd::fem::{
    apply_restriction_adjoint, assemble_a0, assemble_interface_mass, assemble_interface_stiffness,
    assemble_subdomain_stiffness, GridSpec, Side,
};
use robin_dd::linalg::{jacobi_symmetric_eigen, power_spectral_radius, DenseMatrix, PowerOptions};
use robin_dd::spectral::{fd_eigenvalue, mode_coefficients, sine_basis, sine_basis_vector, tilde_lambda};

fn kron_eigvec(i: usize, cols: usize, j: usize, m: usize) -> Vec<f64> {
    let pc = sine_basis_vector(i, cols).unwrap();
    let pr = sine_basis_vector(j, m).unwrap();
    pc.iter().flat_map(|a| pr.iter().map(move |b| a * b)).collect()
}

#[test]
fn a0_is_diagonalised_by_tensor_sines() {
    for n in [1, 2, 5] {
        let g = GridSpec::new(n).unwrap();
        let m = g.n_interface();
        let a0 = assemble_a0(&g, Side::Left);
        for i in 1..=n {
            for j in 1..=m {
                let v = kron_eigvec(i, n, j, m);
                let av = a0.spmv(&v).unwrap();
                let lam = fd_eigenvalue(i, n).unwrap() + fd_eigenvalue(j, m).unwrap();
                let err = av.iter().zip(&v).map(|(a, x)| (a - lam * x).abs()).fold(0.0, f64::max);
                assert!(err < 1e-12, "n={n} i={i} j={j} err={err}");
            }
        }
    }
}

#[test]
fn element_stiffness_is_a0_minus_interface_block() {
    let g = GridSpec::new(4).unwrap();
    let a0 = assemble_a0(&g, Side::Right).to_dense();
    let ah = assemble_subdomain_stiffness(&g, Side::Right).to_dense();
    let ag = assemble_interface_stiffness(&g).to_dense();
    let off = g.interface_offset(Side::Right);
    let m = g.n_interface();
    let mut expect = a0.clone();
    for i in 0..m {
        for j in 0..m {
            expect.set(off + i, off + j, a0.get(off + i, off + j) - ag.get(i, j));
        }
    }
    assert!(ah.max_abs_diff(&expect) < 1e-13);
}

#[test]
fn interface_matrices_in_sine_basis() {
    for n in [1, 3, 8] {
        let g = GridSpec::new(n).unwrap();
        let m = g.n_interface();
        let phi = sine_basis(m);
        let mg = phi
            .matmul(&assemble_interface_mass(&g).to_dense())
            .unwrap()
            .matmul(&phi)
            .unwrap();
        let ag = phi
            .matmul(&assemble_interface_stiffness(&g).to_dense())
            .unwrap()
            .matmul(&phi)
            .unwrap();
        for j in 1..=m {
            let c = mode_coefficients(j, n).unwrap();
            for k in 1..=m {
                let (em, ea) = if j == k {
                    (c.lambda_mass(), c.lambda_stiffness())
                } else {
                    (0.0, 0.0)
                };
                assert!((mg.get(j - 1, k - 1) - em).abs() < 1e-12);
                assert!((ag.get(j - 1, k - 1) - ea).abs() < 1e-12);
            }
        }
    }
}

/// `R A₀⁻¹ Rᵀ` built by dense inversion, against the summed closed form.
#[test]
fn tilde_lambda_matches_dense_inverse() {
    let n = 8;
    let g = GridSpec::new(n).unwrap();
    let m = g.n_interface();
    let inv = assemble_a0(&g, Side::Left).to_dense().inverse().unwrap();
    let off = g.interface_offset(Side::Left);
    let b0 = DenseMatrix::from_fn(m, m, |i, j| inv.get(off + i, off + j));
    let phi = sine_basis(m);
    let d = phi.matmul(&b0).unwrap().matmul(&phi).unwrap();
    for j in 1..=m {
        assert!((d.get(j - 1, j - 1) - tilde_lambda(j, n).unwrap()).abs() < 1e-12);
        for k in (1..=m).filter(|&k| k != j) {
            assert!(d.get(j - 1, k - 1).abs() < 1e-12);
        }
    }
    // Rᵀ places the interface vector in the last column
    let e = apply_restriction_adjoint(&g, Side::Left, &vec![1.0; m]).unwrap();
    assert_eq!(e.iter().filter(|&&v| v == 1.0).count(), m);
}

#[test]
fn jacobi_on_small_interface_mass() {
    // n = 2: M_Γ = (h/6) tridiag(1,4,1) of size 3, eigenvalues (h/6)(4 + 2cos(kπ/4))
    let g = GridSpec::new(2).unwrap();
    let e = jacobi_symmetric_eigen(&assemble_interface_mass(&g).to_dense()).unwrap();
    let h = g.h();
    let mut expect: Vec<f64> = (1..=3)
        .map(|k| h / 6.0 * (4.0 + 2.0 * (k as f64 * std::f64::consts::PI / 4.0).cos()))
        .collect();
    expect.sort_by(f64::total_cmp);
    for (a, b) in e.values.iter().zip(&expect) {
        assert!((a - b).abs() < 1e-15);
    }
}

#[test]
fn power_iteration_on_interface_stiffness() {
    let g = GridSpec::new(4).unwrap();
    let a = assemble_interface_stiffness(&g);
    let r = power_spectral_radius(&a.to_dense(), PowerOptions::default()).unwrap();
    let expect = mode_coefficients(7, 4).unwrap().lambda_stiffness();
    assert!((r - expect).abs() < 1e-8, "{r} vs {expect}");
}
