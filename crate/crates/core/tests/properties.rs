use proptest::prelude::*;

use robin_dd::dd::DDParams;
use robin_dd::fem::SineTransform;
use robin_dd::linalg::{jacobi_symmetric_eigen, DenseMatrix, SparseMatrix};
use robin_dd::spectral::{
    all_mode_coefficients, omega, omega_max, reduction_spectrum, relaxed_rate, theta_star, von_neumann_advisor,
    von_neumann_rho, von_neumann_rho_omega_form,
};

proptest! {
    #[test]
    fn theta_star_is_the_minimax(a in -0.9f64..0.99, d in 0.0f64..0.9, theta in 0.0f64..1.0) {
        let b = (a + d).min(0.999);
        let (t0, r0) = theta_star(a, b);
        prop_assert!((relaxed_rate(t0, a, b) - r0).abs() < 1e-12);
        prop_assert!(r0 <= relaxed_rate(theta, a, b) + 1e-12);
    }

    #[test]
    fn omega_peaks_at_geometric_mean(g1 in 0.01f64..10.0, ratio in 1.0f64..1e4, z in 1e-3f64..1e5) {
        let g2 = g1 * ratio;
        let (z0, w0) = omega_max(g1, g2);
        prop_assert!((omega(z0, g1, g2) - w0).abs() < 1e-12);
        prop_assert!(omega(z, g1, g2) <= w0 + 1e-12);
    }

    #[test]
    fn von_neumann_forms_agree(k in 0.01f64..200.0, g1 in 0.01f64..10.0, g2 in 0.01f64..1e3, theta in 0.0f64..1.0) {
        let a = von_neumann_rho(k, g1, g2, theta);
        let b = von_neumann_rho_omega_form(k, g1, g2, theta);
        prop_assert!((a - b).abs() < 1e-12 * a.abs().max(1.0));
    }

    #[test]
    fn advisor_bound_covers_every_mode(big_k in 2usize..200, g1 in 0.05f64..4.0) {
        let adv = von_neumann_advisor(big_k as f64, g1);
        for k in 1..=big_k {
            let r = von_neumann_rho(k as f64, g1, adv.gamma2, adv.theta);
            prop_assert!(r.abs() <= adv.bound + 1e-12, "k={} rho={} bound={}", k, r, adv.bound);
        }
    }

    #[test]
    fn reduction_spectrum_inside_theorem_band(n in 1usize..300) {
        let h = 1.0 / (2 * n) as f64;
        let spec = reduction_spectrum(n, &DDParams::theorem(h));
        prop_assert!(spec.radius <= 1.0 / 7.0 + 1e-12);
        for m in all_mode_coefficients(n) {
            let c = m.c(1.0, 64.0 / h);
            prop_assert!(c > -1.0 && c < -0.5);
        }
    }

    #[test]
    fn spmv_matches_dense(entries in proptest::collection::vec((0usize..6, 0usize..5, -10.0f64..10.0), 0..30),
                          x in proptest::collection::vec(-5.0f64..5.0, 5)) {
        let a = SparseMatrix::from_triplets(6, 5, &entries);
        let d = a.to_dense();
        let y = a.spmv(&x).unwrap();
        let mut expect = vec![0.0; 6];
        for &(r, c, v) in &entries {
            expect[r] += v * x[c];
        }
        for i in 0..6 {
            prop_assert!((y[i] - expect[i]).abs() < 1e-12);
            let yd: f64 = (0..5).map(|j| d.get(i, j) * x[j]).sum();
            prop_assert!((y[i] - yd).abs() < 1e-12);
        }
    }

    #[test]
    fn sine_transform_is_an_involution(x in proptest::collection::vec(-1.0f64..1.0, 1..40)) {
        let t = SineTransform::new(x.len());
        let mut y = x.clone();
        t.apply(&mut y);
        let e0: f64 = x.iter().map(|v| v * v).sum();
        let e1: f64 = y.iter().map(|v| v * v).sum();
        prop_assert!((e0 - e1).abs() < 1e-12 * e0.max(1.0));
        t.apply(&mut y);
        for (a, b) in x.iter().zip(&y) {
            prop_assert!((a - b).abs() < 1e-13);
        }
    }

    #[test]
    fn jacobi_reconstructs(vals in proptest::collection::vec(-3.0f64..3.0, 21)) {
        // 6x6 symmetric from the upper triangle
        let mut a = DenseMatrix::zeros(6, 6);
        let mut k = 0;
        for i in 0..6 {
            for j in i..6 {
                a.set(i, j, vals[k]);
                a.set(j, i, vals[k]);
                k += 1;
            }
        }
        let e = jacobi_symmetric_eigen(&a).unwrap();
        prop_assert!(e.reconstruct_with(|l| l).max_abs_diff(&a) < 1e-11);
        prop_assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }
}
