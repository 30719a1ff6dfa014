use robin_dd::dd::{robin_robin_solve, DDParams, InnerSolver, StopRule};
use robin_dd::experiments::measure_rate;
use robin_dd::fem::{GridSpec, Side, SubdomainSystem};
use robin_dd::linalg::{jacobi_symmetric_eigen, DenseMatrix};
use robin_dd::operator::{
    build_iteration_operator, check_a2, dtn_schur, equivalence_bounds, iteration_spectral_radius, iteration_spectrum,
    iteration_t, lemma_checks, recommend_params, symmetrized_t, Coordinates, DtNOperator,
};
use robin_dd::spectral::reduction_spectrum;

fn operators(g: &GridSpec) -> (DtNOperator, DtNOperator) {
    let l = SubdomainSystem::homogeneous(g, Side::Left);
    let r = SubdomainSystem::homogeneous(g, Side::Right);
    (
        dtn_schur(&l, Coordinates::MassOrthonormal).unwrap(),
        dtn_schur(&r, Coordinates::MassOrthonormal).unwrap(),
    )
}

/// Spectrum of `R` from the Schur complements against the per-mode formula.
#[test]
fn symmetric_split_matches_closed_form_modes() {
    for n in [1, 2, 4, 8, 16] {
        let g = GridSpec::new(n).unwrap();
        let (s1, s2) = operators(&g);
        let p = DDParams::theorem(g.h());
        let mut from_ops = iteration_spectrum(&s1, &s2, &p).unwrap();
        let mut closed = reduction_spectrum(n, &p).values;
        from_ops.sort_by(f64::total_cmp);
        closed.sort_by(f64::total_cmp);
        for (a, b) in from_ops.iter().zip(&closed) {
            assert!((a - b).abs() < 1e-8, "n={n}: {a} vs {b}");
        }
    }
}

#[test]
fn schur_spectrum_scales_like_one_over_h() {
    let mut lo = f64::INFINITY;
    let mut hi_scaled: f64 = 0.0;
    let mut hi_scaled_min = f64::INFINITY;
    for n in [2, 4, 8, 16, 32] {
        let g = GridSpec::new(n).unwrap();
        let (s, _) = operators(&g);
        lo = lo.min(s.min_eig);
        hi_scaled = hi_scaled.max(s.max_eig * g.h());
        hi_scaled_min = hi_scaled_min.min(s.max_eig * g.h());
    }
    assert!(lo > 3.0, "c0 = {lo}");
    assert!(
        hi_scaled < 20.0 && hi_scaled_min > 5.0,
        "C0 in [{hi_scaled_min}, {hi_scaled}]"
    );
}

#[test]
fn symmetrized_operator_is_similar_to_t() {
    for n in [2, 4, 8] {
        let g = GridSpec::third_split(n).unwrap();
        let (s1, s2) = operators(&g);
        let rec = recommend_params(&s1, &s2).unwrap();
        let tt = jacobi_symmetric_eigen(&symmetrized_t(&s1, &s2, &rec.params).unwrap()).unwrap();
        // T is not symmetric; compare traces of powers instead of eigenvalues
        let t = iteration_t(&s1, &s2, &rec.params).unwrap();
        let mut tk = DenseMatrix::identity(t.rows());
        for k in 1..=4 {
            tk = tk.matmul(&t).unwrap();
            let tr: f64 = (0..t.rows()).map(|i| tk.get(i, i)).sum();
            let expect: f64 = tt.values.iter().map(|v| v.powi(k)).sum();
            assert!((tr - expect).abs() < 1e-9 * expect.abs().max(1.0), "n={n} k={k}");
        }
    }
}

#[test]
fn recommended_parameters_meet_their_bound() {
    for n in [2, 4, 8, 16] {
        for g in [GridSpec::new(n).unwrap(), GridSpec::third_split(n).unwrap()] {
            let (s1, s2) = operators(&g);
            let rec = recommend_params(&s1, &s2).unwrap();
            check_a2(&s1, &s2, rec.params.gamma1, rec.params.gamma2).unwrap();
            let r = build_iteration_operator(&s1, &s2, &rec.params).unwrap();
            let rho = iteration_spectral_radius(&r, Some((&s1, &s2, &rec.params))).unwrap();
            assert!(rho <= rec.bound + 1e-9, "n={n}: {rho} > {}", rec.bound);
            let t = rec.bounds.t_eff();
            let tt = jacobi_symmetric_eigen(&symmetrized_t(&s1, &s2, &rec.params).unwrap()).unwrap();
            // γ₁ = λ_min makes the lower end touch zero
            assert!(tt.min() >= -1e-10 && tt.max() <= 2.0 * t - 1.0 + 1e-10);
        }
    }
}

#[test]
fn lemma_inequalities_on_the_off_centre_split() {
    let g = GridSpec::third_split(8).unwrap();
    let (s1, s2) = operators(&g);
    let b = equivalence_bounds(&s1, &s2).unwrap();
    // the high modes are local, so t approaches 1 from below on this split
    assert!(b.s < 1.0 && (b.t - 1.0).abs() < 1e-6 && b.t_eff() >= 1.0);
    let rec = recommend_params(&s1, &s2).unwrap();
    let c = lemma_checks(&s1, &s2, &rec.params, 50, 1).unwrap();
    assert!((c.inverse_pencil.0 - c.inverse_pencil_predicted.0).abs() < 1e-10);
    assert!((c.inverse_pencil.1 - c.inverse_pencil_predicted.1).abs() < 1e-10);
    assert!(c.min_eig_t >= -1e-10);
    assert!(c.min_eig_t_lower_bound <= c.min_eig_t + 1e-10);
    assert!(c.max_eig_t <= c.max_eig_t_upper_bound + 1e-10);
    assert!(c.quotient_inequality_slack >= -1e-10);
}

#[test]
fn a2_violations_name_the_inequality() {
    let g = GridSpec::new(3).unwrap();
    let (s1, s2) = operators(&g);
    let e = check_a2(&s1, &s2, 1e3, 1e6).unwrap_err().to_string();
    assert!(e.contains("gamma1"), "{e}");
    let e = check_a2(&s1, &s2, 1.0, 1.0).unwrap_err().to_string();
    assert!(e.contains("gamma2"), "{e}");
}

#[test]
fn operator_radius_predicts_measured_rate() {
    let n = 8;
    let g = GridSpec::new(n).unwrap();
    let (s1, s2) = operators(&g);
    let p = DDParams::theorem(g.h()).with_inner(InnerSolver::FastSine);
    let r = build_iteration_operator(&s1, &s2, &p).unwrap();
    let rho = iteration_spectral_radius(&r, Some((&s1, &s2, &p))).unwrap();
    let (rate, _, converged) = measure_rate(&g, &p, 7).unwrap();
    assert!(converged);
    assert!((rate.unwrap() - rho).abs() < 0.02, "{rate:?} vs {rho}");

    // a relative stop of the same run keeps its trace history for the rate
    let l = SubdomainSystem::homogeneous(&g, Side::Left);
    let rr = SubdomainSystem::homogeneous(&g, Side::Right);
    let rep = robin_robin_solve(
        &l,
        &rr,
        &p.with_stop_rule(StopRule::Relative).with_stop_tol(1e-12),
        &vec![1.0; 15],
    )
    .unwrap();
    assert!(rep.reduction_rate.unwrap() <= rho + 0.02);
}

#[test]
fn euclidean_coordinates_change_the_operator() {
    let g = GridSpec::new(2).unwrap();
    let l = SubdomainSystem::homogeneous(&g, Side::Left);
    let a = dtn_schur(&l, Coordinates::MassOrthonormal).unwrap();
    let b = dtn_schur(&l, Coordinates::Euclidean).unwrap();
    // Ŝ = L⁻¹SL⁻ᵀ; the two spectra differ by the mass scaling ~h
    assert!(a.max_eig > b.max_eig);
}
