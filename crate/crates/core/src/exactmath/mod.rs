//! Exact arithmetic substrate: rationals, dense rational matrices, sparse
//! multivariate polynomials and Pfaffians.

pub mod matrix;
pub mod pfaffian;
pub mod poly;
pub mod polymatrix;
pub mod rational;
pub mod unipoly;

pub use matrix::RationalMatrix;
pub use poly::{poly_divides, poly_eval, MultiPoly};
pub use polymatrix::{poly_pfaffian, PolyMatrix};
pub use rational::{factorial, fmt_rational, frac, int, parse_rational, Rational};
pub use unipoly::{minimal_polynomial, UniPoly};

/// Reduced row-echelon form and pivot columns.
pub fn rref(m: &RationalMatrix) -> (RationalMatrix, Vec<usize>) {
    m.rref()
}

/// Basis of the null space of `m`.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    m.kernel_basis()
}
