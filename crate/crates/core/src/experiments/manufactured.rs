/// `u(x, y) = 64 (x³ − x⁴)(y − y²)`.
pub fn exact_u(x: f64, y: f64) -> f64 {
    64.0 * (x.powi(3) - x.powi(4)) * (y - y * y)
}

/// `f = −Δu = 64 [(12x² − 6x)(y − y²) + 2(x³ − x⁴)]`.
pub fn source_f(x: f64, y: f64) -> f64 {
    64.0 * ((12.0 * x * x - 6.0 * x) * (y - y * y) + 2.0 * (x.powi(3) - x.powi(4)))
}

/// The test problem: exact solution and matching right-hand side.
pub fn manufactured_solution() -> (fn(f64, f64) -> f64, fn(f64, f64) -> f64) {
    (exact_u, source_f)
}
