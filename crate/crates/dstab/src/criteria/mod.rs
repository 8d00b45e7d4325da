//! The theorem engine: Lyapunov verification over LMI regions, the
//! shift/sector reductions to Hurwitz problems, the six cross-checked
//! boundary predicates, compound-matrix stability criteria, the randomized
//! falsifier with witness bisection, and the combined D-stability check
//! pipeline.

pub mod boundary;
pub mod check;
pub mod compound_checks;
pub mod falsify;
pub mod lyap;
pub mod verdict;

pub use boundary::{boundary_tests_imaginary, boundary_tests_sector, BoundaryTestBundle};
pub use check::{dstab_check, recognized_cos2theta, region_stable, CheckOutcome, ExactSettings};
pub use compound_checks::{
    dstab_necessary, dstab_necessary_exact, fuller_stable, fuller_stable_exact,
    relative_dstab_compound_check, shift_dstab_compound_check,
};
pub use falsify::{falsify_sweep, falsify_with, sample_diagonal, sample_rng};
pub use lyap::{double_diag, lyapunov_certificate, sector_embedding, shift_reduce, verify_lyapunov};
pub use verdict::{DiagonalPerturbation, PerturbationClass, StabilityVerdict, VerdictStatus, Witness};
