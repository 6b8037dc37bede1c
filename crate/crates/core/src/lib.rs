//! Exact computations on finite-dimensional Lie algebras over the rationals:
//! derivations, completeness, maximal tori, semidirect extensions and the
//! existence of (exact) symplectic structures.

pub mod error;
pub mod exactmath;
pub mod liealg;
pub mod structure;
pub mod symplectic;
pub mod catalog;
pub mod cli;

pub use error::{Error, Result};
pub use liealg::{LieAlgebra, Subspace};
