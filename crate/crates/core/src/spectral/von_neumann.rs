/// `ω(z) = (γ₂ − z)/(γ₂ + z) · (z − γ₁)/(z + γ₁)`.
pub fn omega(z: f64, gamma1: f64, gamma2: f64) -> f64 {
    (gamma2 - z) / (gamma2 + z) * ((z - gamma1) / (z + gamma1))
}

/// Maximiser `z₀ = √(γ₁γ₂)` of `ω` on `z > 0` and the maximum
/// `(η − 1)²/(η + 1)²`, `η = √(γ₂/γ₁)`.
pub fn omega_max(gamma1: f64, gamma2: f64) -> (f64, f64) {
    let eta = (gamma2 / gamma1).sqrt();
    ((gamma1 * gamma2).sqrt(), ((eta - 1.0) / (eta + 1.0)).powi(2))
}

/// `max{|θ − (1 − θ)a|, |θ − (1 − θ)b|}`.
pub fn relaxed_rate(theta: f64, a: f64, b: f64) -> f64 {
    (theta - (1.0 - theta) * a).abs().max((theta - (1.0 - theta) * b).abs())
}

/// Minimiser over `θ ∈ [0, 1]` of [`relaxed_rate`] and the minimum value:
/// `θ₀ = (a + b)/(2 + a + b)`, `|b − a|/(2 + a + b)`.
pub fn theta_star(a: f64, b: f64) -> (f64, f64) {
    ((a + b) / (2.0 + a + b), (b - a).abs() / (2.0 + a + b))
}

fn coth(k: f64) -> f64 {
    1.0 / k.tanh()
}

/// Reduction factor of Fourier mode `k` for two unit strips.
pub fn von_neumann_rho(k: f64, gamma1: f64, gamma2: f64, theta: f64) -> f64 {
    let s = k * coth(k);
    let g = gamma1 + gamma2;
    theta + (1.0 - theta) * (g / (gamma2 + s) - 1.0) * (g / (gamma1 + s) - 1.0)
}

/// The same factor written as `θ − (1 − θ)ω(k coth k)`.
pub fn von_neumann_rho_omega_form(k: f64, gamma1: f64, gamma2: f64, theta: f64) -> f64 {
    theta - (1.0 - theta) * omega(k * coth(k), gamma1, gamma2)
}

/// Parameters that keep every mode `1 ≤ k ≤ K` contracting, and the
/// resulting bound on `|ρ|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VonNeumannAdvice {
    pub gamma2: f64,
    pub theta: f64,
    pub bound: f64,
}

/// Picks `γ₂ = 2K coth K` and the minimax relaxation for the given `γ₁`.
///
/// For `γ₁ ≤ coth 1` all symbols `k coth k` lie in `[γ₁, γ₂]`, where `ω ≥ 0`.
/// For larger `γ₁` the low modes see `ω ≥ −ζ`, `ζ = (γ₁ − coth 1)/(γ₁ + coth 1)`,
/// and the relaxation balances `−ζ` against `ω(z₀)`.
pub fn von_neumann_advisor(big_k: f64, gamma1: f64) -> VonNeumannAdvice {
    let gamma2 = 2.0 * big_k * coth(big_k);
    let (_, w0) = omega_max(gamma1, gamma2);
    let c1 = coth(1.0);
    if gamma1 <= c1 {
        let theta = w0 / (2.0 + w0);
        return VonNeumannAdvice {
            gamma2,
            theta,
            bound: theta,
        };
    }
    let zeta = (gamma1 - c1) / (gamma1 + c1);
    if w0 <= zeta {
        VonNeumannAdvice {
            gamma2,
            theta: 0.0,
            bound: zeta,
        }
    } else {
        VonNeumannAdvice {
            gamma2,
            theta: (w0 - zeta) / (2.0 + w0 - zeta),
            bound: (w0 + zeta) / (2.0 + w0 - zeta),
        }
    }
}

/// Guaranteed reduction rate as a function of the relaxation for
/// `γ₁ = 1`, `γ₂ = 64/h`: `1 − 2θ` up to `θ = 3/7`, `(3θ − 1)/2` beyond.
pub fn corollary_rate(theta: f64) -> f64 {
    if theta <= 3.0 / 7.0 {
        1.0 - 2.0 * theta
    } else {
        (3.0 * theta - 1.0) / 2.0
    }
}
