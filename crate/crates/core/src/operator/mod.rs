//! Interface (Steklov–Poincaré) analysis of the Robin-Robin iteration on an
//! arbitrary vertical split: discrete DtN operators as Schur complements,
//! the error operator `R = θ − (1 − θ)T`, its symmetric similar form and the
//! spectral-equivalence driven parameter choice.

mod analysis;
mod dtn;

pub use analysis::{
    build_iteration_operator, check_a2, equivalence_bounds, iteration_spectral_radius, iteration_spectrum, iteration_t,
    lemma_checks, pencil_eigenvalues, recommend_params, symmetrized_t, EquivalenceBounds, LemmaChecks, Recommendation,
};
pub use dtn::{dtn_schur, schur_complement, Coordinates, DtNOperator};
