//! Uniform criss grid of the unit square split by a vertical interface, and
//! the P1 finite-element matrices and vectors on each half.
//!
//! Every cell of the `2n × 2n` grid is cut by its `/` diagonal. With this
//! triangulation the P1 stiffness with Dirichlet data is exactly the
//! five-point matrix `A₀`, and dropping the Dirichlet condition on the
//! interface removes `A_Γ` from its trailing block.

mod assembly;
mod fast;
mod grid;
mod norms;
mod system;

pub use assembly::{
    apply_restriction, apply_restriction_adjoint, assemble_a0, assemble_global, assemble_interface_mass,
    assemble_interface_stiffness, assemble_load, assemble_subdomain_mass, assemble_subdomain_stiffness, LoadRule,
};
pub use fast::{FastSineSolver, SineTransform};
pub use grid::{GridSpec, Side};
pub use norms::{error_norms, ErrorNorms};
pub use system::SubdomainSystem;

/// Shorthand for [`GridSpec::new`].
pub fn build_grid(n: usize) -> crate::Result<GridSpec> {
    GridSpec::new(n)
}
