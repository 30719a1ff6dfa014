//! Robin-Robin domain decomposition for the Poisson problem on the unit
//! square: P1 assembly on a uniform criss grid, the relaxed three-parameter
//! Robin-Robin iteration and a Dirichlet-Neumann baseline, the closed-form
//! mode analysis of the iteration, and an operator-level analysis through
//! discrete Dirichlet-to-Neumann maps.

pub mod dd;
pub mod error;
pub mod experiments;
pub mod fem;
pub mod linalg;
pub mod operator;
pub mod spectral;

pub use error::{Error, Result};
