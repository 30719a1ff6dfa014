//! Robin-Robin and Dirichlet-Neumann iterations between the two subdomains.

mod dirichlet_neumann;
mod error_map;
mod inner;
mod params;
mod report;
mod robin;

pub use dirichlet_neumann::{dirichlet_neumann_solve, DnRhs};
pub use error_map::error_propagation_matrix;
pub use params::{DDParams, InnerSolver, StopRule};
pub use report::{measured_reduction_rate, DDReport};
pub use robin::robin_robin_solve;
