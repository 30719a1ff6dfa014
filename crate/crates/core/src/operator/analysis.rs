use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::dtn::DtNOperator;
use crate::dd::DDParams;
use crate::error::{check_len, Error, Result};
use crate::linalg::{dot, jacobi_symmetric_eigen, power_spectral_radius, DenseMatrix, PowerOptions};

/// Extreme constants of `s (S₁v, v) ≤ (S₂v, v) ≤ t (S₁v, v)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquivalenceBounds {
    pub s: f64,
    pub t: f64,
}

impl EquivalenceBounds {
    /// Whether `s ≤ 1 ≤ t`.
    pub fn is_ordered(&self) -> bool {
        self.s <= 1.0 && 1.0 <= self.t
    }

    /// `t` raised to 1 if needed; any upper constant is also a valid one.
    pub fn t_eff(&self) -> f64 {
        self.t.max(1.0)
    }

    /// `s` lowered to 1 if needed.
    pub fn s_eff(&self) -> f64 {
        self.s.min(1.0)
    }
}

/// Generalized eigenvalues of `P v = μ Q v` for SPD `Q`, ascending.
pub fn pencil_eigenvalues(p: &DenseMatrix, q: &DenseMatrix) -> Result<Vec<f64>> {
    let qe = jacobi_symmetric_eigen(q)?;
    if qe.min() <= 0.0 {
        return Err(Error::Precondition(
            "pencil denominator is not positive definite".into(),
        ));
    }
    let q_isqrt = qe.reconstruct_with(|l| 1.0 / l.sqrt());
    let c = q_isqrt.matmul(&p.matmul(&q_isqrt)?)?;
    Ok(jacobi_symmetric_eigen(&c.symmetrized())?.values)
}

/// Extreme generalized eigenvalues of the pencil `(S₂, S₁)`.
pub fn equivalence_bounds(s1: &DtNOperator, s2: &DtNOperator) -> Result<EquivalenceBounds> {
    check_len(s1.dim(), s2.dim())?;
    let isqrt = s1.function(|l| 1.0 / l.sqrt());
    let c = isqrt.matmul(&s2.matrix.matmul(&isqrt)?)?;
    let e = jacobi_symmetric_eigen(&c.symmetrized())?;
    Ok(EquivalenceBounds { s: e.min(), t: e.max() })
}

/// `T = (S₂ − γ₁)(γ₂ + S₂)⁻¹ (γ₂ − S₁)(γ₁ + S₁)⁻¹`.
pub fn iteration_t(s1: &DtNOperator, s2: &DtNOperator, params: &DDParams) -> Result<DenseMatrix> {
    check_len(s1.dim(), s2.dim())?;
    let (g1, g2) = (params.gamma1, params.gamma2);
    let q = s2.function(|l| (l - g1) / (g2 + l));
    let p = s1.function(|l| (g2 - l) / (g1 + l));
    q.matmul(&p)
}

/// `R = θ − (1 − θ)T`, the one-step map of the interface error.
pub fn build_iteration_operator(s1: &DtNOperator, s2: &DtNOperator, params: &DDParams) -> Result<DenseMatrix> {
    let t = iteration_t(s1, s2, params)?;
    Ok(t.scale(-(1.0 - params.theta)).shift(params.theta))
}

/// Which of the two parameter inequalities fails, if any.
pub fn check_a2(s1: &DtNOperator, s2: &DtNOperator, gamma1: f64, gamma2: f64) -> Result<()> {
    let lo = s1.min_eig.min(s2.min_eig);
    let hi = s1.max_eig.max(s2.max_eig);
    if gamma1 > lo {
        return Err(Error::Precondition(format!(
            "gamma1 <= min(lambda_min(S1), lambda_min(S2)) fails: {gamma1} > {lo}"
        )));
    }
    if gamma2 < 3.0 * hi {
        return Err(Error::Precondition(format!(
            "gamma2 >= 3 max(lambda_max(S1), lambda_max(S2)) fails: {gamma2} < {}",
            3.0 * hi
        )));
    }
    Ok(())
}

fn similar_symmetric(s1: &DtNOperator, s2: &DtNOperator, params: &DDParams) -> Result<DenseMatrix> {
    let (g1, g2) = (params.gamma1, params.gamma2);
    let p = s1.function(|l| ((g2 - l).max(0.0) / (g1 + l)).sqrt());
    let q = s2.function(|l| (l - g1) / (g2 + l));
    Ok(p.matmul(&q.matmul(&p)?)?.symmetrized())
}

/// `T̃ = (γ₁+S₁)^{−½}(γ₂−S₁)^{½}(S₂−γ₁)(γ₂+S₂)⁻¹(γ₂−S₁)^{½}(γ₁+S₁)^{−½}`, a
/// symmetric matrix similar to `T`. Requires the parameter assumptions
/// checked by [`check_a2`].
pub fn symmetrized_t(s1: &DtNOperator, s2: &DtNOperator, params: &DDParams) -> Result<DenseMatrix> {
    check_len(s1.dim(), s2.dim())?;
    check_a2(s1, s2, params.gamma1, params.gamma2)?;
    similar_symmetric(s1, s2, params)
}

/// Eigenvalues of `R`, computed from a symmetric matrix similar to `T`
/// (needs `γ₂ ≥ λ_max(S₁)` so the square root is real).
pub fn iteration_spectrum(s1: &DtNOperator, s2: &DtNOperator, params: &DDParams) -> Result<Vec<f64>> {
    check_len(s1.dim(), s2.dim())?;
    if params.gamma2 < s1.max_eig {
        return Err(Error::Precondition(format!(
            "gamma2 >= lambda_max(S1) fails: {} < {}",
            params.gamma2, s1.max_eig
        )));
    }
    let t = jacobi_symmetric_eigen(&similar_symmetric(s1, s2, params)?)?;
    let mut r: Vec<f64> = t
        .values
        .iter()
        .map(|mu| params.theta - (1.0 - params.theta) * mu)
        .collect();
    r.sort_by(f64::total_cmp);
    Ok(r)
}

/// Parameters following the (A2) rule and `θ = (2t − 1)/(2t + 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Recommendation {
    pub params: DDParams,
    pub bounds: EquivalenceBounds,
    /// Guaranteed radius `(2t − 1)/(2t + 1)` with `t = t_eff`.
    pub bound: f64,
}

pub fn recommend_params(s1: &DtNOperator, s2: &DtNOperator) -> Result<Recommendation> {
    let bounds = equivalence_bounds(s1, s2)?;
    let t = bounds.t_eff();
    let theta = (2.0 * t - 1.0) / (2.0 * t + 1.0);
    let params = DDParams::new(s1.min_eig.min(s2.min_eig), 3.0 * s1.max_eig.max(s2.max_eig), theta)?;
    Ok(Recommendation {
        params,
        bounds,
        bound: theta,
    })
}

/// `max |λ(R)|` by power iteration; if that stalls, by the symmetric
/// eigenvalue problem of the similar form when `S₁`, `S₂` are supplied.
pub fn iteration_spectral_radius(
    r: &DenseMatrix,
    fallback: Option<(&DtNOperator, &DtNOperator, &DDParams)>,
) -> Result<f64> {
    match power_spectral_radius(r, PowerOptions::default()) {
        Ok(v) => Ok(v),
        Err(e) => match fallback {
            Some((s1, s2, p)) => Ok(iteration_spectrum(s1, s2, p)?
                .iter()
                .fold(0.0f64, |m, v| m.max(v.abs()))),
            None => Err(e),
        },
    }
}

/// Numerical values behind the lemma inequalities for one operator pair.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaChecks {
    /// Extremes of the pencil `(S₂⁻¹, S₁⁻¹)` and the predicted `(1/t, 1/s)`.
    pub inverse_pencil: (f64, f64),
    pub inverse_pencil_predicted: (f64, f64),
    /// Smallest eigenvalue of `T̃` and its explicit lower bound.
    pub min_eig_t: f64,
    pub min_eig_t_lower_bound: f64,
    /// Largest eigenvalue of `T̃` and `2t − 1`.
    pub max_eig_t: f64,
    pub max_eig_t_upper_bound: f64,
    /// Worst slack of `(2t−1)((γ₂−S₁)⁻¹(γ₁+S₁)v,v) − ((γ₂−S₂)⁻¹(γ₁+S₂)v,v)`
    /// over random `v` (non-negative when the inequality holds).
    pub quotient_inequality_slack: f64,
}

/// Evaluates the lemma inequalities for parameters satisfying (A2).
pub fn lemma_checks(
    s1: &DtNOperator,
    s2: &DtNOperator,
    params: &DDParams,
    samples: usize,
    seed: u64,
) -> Result<LemmaChecks> {
    let bounds = equivalence_bounds(s1, s2)?;
    let t = bounds.t_eff();
    let (g1, g2) = (params.gamma1, params.gamma2);

    let s1_inv = s1.function(|l| 1.0 / l);
    let s2_inv = s2.function(|l| 1.0 / l);
    let inv = pencil_eigenvalues(&s2_inv, &s1_inv)?;

    let tt = jacobi_symmetric_eigen(&symmetrized_t(s1, s2, params)?)?;
    let lower = (s2.min_eig - g1) / (g2 + s2.min_eig) * ((g2 - s1.max_eig) / (g1 + s1.max_eig));

    let q1 = s1.function(|l| (g1 + l) / (g2 - l));
    let q2 = s2.function(|l| (g1 + l) / (g2 - l));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut slack = f64::INFINITY;
    for _ in 0..samples {
        let v: Vec<f64> = (0..s1.dim()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let lhs = dot(&q2.matvec(&v)?, &v);
        let rhs = (2.0 * t - 1.0) * dot(&q1.matvec(&v)?, &v);
        slack = slack.min((rhs - lhs) / rhs.abs().max(1.0));
    }
    Ok(LemmaChecks {
        inverse_pencil: (inv[0], inv[inv.len() - 1]),
        inverse_pencil_predicted: (1.0 / bounds.t, 1.0 / bounds.s),
        min_eig_t: tt.min(),
        min_eig_t_lower_bound: lower,
        max_eig_t: tt.max(),
        max_eig_t_upper_bound: 2.0 * t - 1.0,
        quotient_inequality_slack: slack,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::Coordinates;
    use crate::spectral::omega;

    fn diag_op(d: &[f64]) -> DtNOperator {
        DtNOperator::from_matrix(DenseMatrix::diagonal(d), Coordinates::MassOrthonormal).unwrap()
    }

    #[test]
    fn equal_operators() {
        let s = diag_op(&[1.0, 3.0, 7.0]);
        let b = equivalence_bounds(&s, &s).unwrap();
        assert!((b.s - 1.0).abs() < 1e-14 && (b.t - 1.0).abs() < 1e-14);
        let r = recommend_params(&s, &s).unwrap();
        assert!((r.params.theta - 1.0 / 3.0).abs() < 1e-14);
        assert_eq!(r.params.gamma1, 1.0);
        assert_eq!(r.params.gamma2, 21.0);
    }

    #[test]
    fn scaled_operators_are_flagged() {
        let s1 = diag_op(&[1.0, 2.0]);
        let s2 = diag_op(&[2.0, 4.0]);
        let b = equivalence_bounds(&s1, &s2).unwrap();
        assert!((b.s - 2.0).abs() < 1e-14 && (b.t - 2.0).abs() < 1e-14);
        assert!(!b.is_ordered());
        let r = recommend_params(&s1, &s2).unwrap();
        assert!((r.params.theta - 0.6).abs() < 1e-14);
    }

    #[test]
    fn diagonal_operator_matches_omega() {
        let d = [0.5, 2.0, 9.0];
        let s = diag_op(&d);
        let p = DDParams::new(0.4, 30.0, 0.25).unwrap();
        let r = build_iteration_operator(&s, &s, &p).unwrap();
        for (i, l) in d.iter().enumerate() {
            let expected = p.theta - (1.0 - p.theta) * omega(*l, p.gamma1, p.gamma2);
            assert!((r.get(i, i) - expected).abs() < 1e-14);
        }
        let tt = symmetrized_t(&s, &s, &DDParams::new(0.4, 30.0, 0.25).unwrap()).unwrap();
        let t = iteration_t(&s, &s, &p).unwrap();
        assert!(tt.max_abs_diff(&t) < 1e-14);
    }

    #[test]
    fn a2_violation_is_named() {
        let s = diag_op(&[1.0, 3.0]);
        let p = DDParams::new(2.0, 100.0, 0.3).unwrap();
        let err = symmetrized_t(&s, &s, &p).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("gamma1")));
        let p = DDParams::new(0.5, 5.0, 0.3).unwrap();
        let err = symmetrized_t(&s, &s, &p).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("gamma2")));
    }

    #[test]
    fn radius_of_diagonal() {
        let r = DenseMatrix::diagonal(&[0.2, -0.3]);
        assert!((iteration_spectral_radius(&r, None).unwrap() - 0.3).abs() < 1e-10);
    }
}
