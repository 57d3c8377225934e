//! Exact rational linear algebra plus a symmetric eigensolver.

pub mod matrix;
pub mod poly;
pub mod rational;
pub mod solve;
pub mod spectral;

pub use matrix::{matrix_inner, matrix_inner_hadamard, IntMatrix, RationalMatrix};
pub use poly::{char_poly, RationalPoly};
pub use rational::Rational;
pub use spectral::{real_eigenvalues, SpectralData, DEFAULT_CLUSTER_TOL, DEFAULT_TOL};
