//! Dense real, complex and exact-rational matrix arithmetic: spectra,
//! characteristic polynomials, Kronecker products, Lyapunov solves and
//! definiteness tests used by every other module.

pub mod complex_lu;
pub mod eig;
pub mod lyapunov;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod sym;

pub use eig::{eigenvalues, multiset_match, ComplexScalar, Spectrum};
pub use lyapunov::{lyapunov_solve, LyapunovSolution};
pub use matrix::{RealMatrix, MAX_DIM};
pub use poly::{char_poly, char_poly_exact, principal_minor_sums, principal_minor_sums_exact, Polynomial};
pub use rational::{format_rat, parse_rat, rat_i64, rat_int, Rat, RationalMatrix};
pub use sym::{
    hermitian_eigenvalues, is_negative_definite, is_positive_definite, is_positive_semidefinite,
    symmetric_eigenvalues,
};
