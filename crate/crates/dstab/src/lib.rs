//! Stability and generalized D-stability analysis of real square matrices
//! over unbounded LMI regions: the open left half-plane, shifted
//! half-planes, and conic sectors about the negative real axis.
//!
//! The library decides, certifies or falsifies whether the spectrum of
//! every diagonally perturbed matrix D*A (or A - D in the additive mode)
//! stays inside a region:
//!
//! - [`regions`] represents LMI regions by generating matrices (L, M) with
//!   membership, boundary and recession tests;
//! - [`linalg`] supplies dense real/rational arithmetic, spectra,
//!   characteristic polynomials, Kronecker products and Lyapunov solves;
//! - [`classes`] implements the Q / P / P0 / P0+ determinantal classes;
//! - [`compound`] builds second additive compound matrices, whose spectra
//!   are pairwise eigenvalue sums;
//! - [`criteria`] houses the theorem engine: generalized Lyapunov
//!   verification, shift/sector reductions, six cross-checked boundary
//!   predicates, compound stability criteria, the randomized falsifier
//!   with witness bisection, and the combined check pipeline;
//! - [`certify`] produces exact rational polynomial certificates
//!   (parametric block determinants, cleared characteristic polynomials,
//!   one-signed-coefficient orthant positivity);
//! - [`systems`] reduces second-order mechanical systems and
//!   fractional-order families to the matrix checks;
//! - [`cli`] is the command-line front end (`eig`, `classes`, `compound`,
//!   `region-check`, `boundary`, `check`, `certify`, `mech`, `frac`,
//!   `sweep`).
//!
//! # Runnable examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run -p dstab --example spectra_and_regions
//! cargo run -p dstab --example matrix_classes
//! cargo run -p dstab --example compound_spectra
//! cargo run -p dstab --example lyapunov_certificates
//! cargo run -p dstab --example boundary_bundle
//! cargo run -p dstab --example exact_certificate
//! cargo run -p dstab --example falsification
//! cargo run -p dstab --example mechanical_damping
//! cargo run -p dstab --example fractional_order
//! cargo run -p dstab --example adjustment_speeds
//! ```
//!
//! # Quick start
//!
//! ```
//! use dstab::linalg::RealMatrix;
//! use dstab::regions::LmiRegion;
//! use dstab::criteria::{dstab_check, VerdictStatus};
//! use dstab::tol::Tol;
//!
//! // Hurwitz stable, but a diagonal scaling pushes eigenvalues across the
//! // imaginary axis: the pipeline finds and bisects a witness.
//! let a = RealMatrix::from_rows(&[vec![1.0, -2.0], vec![2.0, -2.5]]).unwrap();
//! let out = dstab_check(&a, &LmiRegion::half_plane(), None, 2000, 7, Tol::DEFAULT, None)
//!     .unwrap();
//! assert_eq!(out.verdict.status, VerdictStatus::Falsified);
//! ```

pub mod certify;
pub mod classes;
pub mod cli;
pub mod compound;
pub mod criteria;
pub mod error;
pub mod linalg;
pub mod regions;
pub mod systems;
pub mod tol;

pub use error::{Error, Result};
pub use tol::Tol;
