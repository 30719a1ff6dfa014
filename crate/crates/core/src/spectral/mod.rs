//! Closed-form spectral quantities of the Robin-Robin iteration on the
//! uniform grid, and the Fourier-mode analysis on two unit strips.
//!
//! On the symmetric split every interface operator is a polynomial in the
//! 1D Laplacian along the interface, so the one-step error map is
//! `Φᵀ diag(θ + (1 − θ)c_j) Φ` with `Φ = Φ_{2n−1}`.

mod modes;
mod von_neumann;

pub use modes::{
    all_mode_coefficients, bound_margins, cj_eigenvalue, fd_eigenvalue, mode_coefficients, reduction_spectrum,
    sine_basis, sine_basis_vector, tilde_lambda, BoundMargins, ModeCoefficients, ReductionSpectrum,
};
pub use von_neumann::{
    corollary_rate, omega, omega_max, relaxed_rate, theta_star, von_neumann_advisor, von_neumann_rho,
    von_neumann_rho_omega_form, VonNeumannAdvice,
};
