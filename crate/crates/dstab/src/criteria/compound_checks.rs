//! Stability and D-stability tests built from second additive compounds:
//! the Fuller Hurwitz criterion (both -A and -A^[2] are Q-matrices), the
//! P0+ necessary condition for D-stability, and the per-D building blocks
//! of the sector and shift compound criteria.

use crate::classes::{is_p0_plus_matrix, is_p0_plus_matrix_exact, is_q_matrix, is_q_matrix_exact};
use crate::compound::{second_additive_compound, second_additive_compound_exact};
use crate::criteria::lyap::{double_diag, sector_embedding};
use crate::error::{Error, Result};
use crate::linalg::matrix::RealMatrix;
use crate::linalg::rational::RationalMatrix;
use crate::tol::Tol;

/// Hurwitz stability by the compound criterion: both -A and -A^[2] must be
/// Q-matrices. Polynomial-time, no eigenvalue computation.
pub fn fuller_stable(a: &RealMatrix, tol: Tol) -> Result<bool> {
    if a.dim() < 2 {
        return Err(Error::CompoundUndefined(a.dim()));
    }
    if !is_q_matrix(&a.neg(), tol) {
        return Ok(false);
    }
    let compound = second_additive_compound(a)?;
    Ok(is_q_matrix(&compound.matrix.neg(), tol))
}

/// Exact-arithmetic Fuller test for rational matrices.
pub fn fuller_stable_exact(a: &RationalMatrix) -> Result<bool> {
    if a.dim() < 2 {
        return Err(Error::CompoundUndefined(a.dim()));
    }
    if !is_q_matrix_exact(&a.neg()) {
        return Ok(false);
    }
    let compound = second_additive_compound_exact(a)?;
    Ok(is_q_matrix_exact(&compound.neg()))
}

/// Necessary condition for multiplicative D-stability: -A must be a
/// P0+-matrix. A false result definitively rules D-stability out.
pub fn dstab_necessary(a: &RealMatrix, tol: Tol) -> Result<bool> {
    is_p0_plus_matrix(&a.neg(), tol)
}

pub fn dstab_necessary_exact(a: &RationalMatrix) -> Result<bool> {
    is_p0_plus_matrix_exact(&a.neg())
}

/// Per-D building block of the sector compound criterion: with
/// Dd = diag(D, D) and At the sector embedding of A, tests whether both
/// -(Dd At) and -(Dd At)^[2] are Q-matrices. Equivalent to sigma(DA) lying
/// in the sector for this particular D.
pub fn relative_dstab_compound_check(
    a: &RealMatrix,
    theta: f64,
    d: &[f64],
    tol: Tol,
) -> Result<bool> {
    if d.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: d.len(),
        });
    }
    let embedded = sector_embedding(a, theta)?;
    let scaled = embedded.scale_rows(&double_diag(d));
    if !is_q_matrix(&scaled.neg(), tol) {
        return Ok(false);
    }
    let compound = second_additive_compound(&scaled)?;
    Ok(is_q_matrix(&compound.matrix.neg(), tol))
}

/// Per-D building block of the shifted-half-plane compound criterion:
/// tests whether both -(DA - alpha I) and -(DA - alpha I)^[2] are
/// Q-matrices. The admissible class depends on the sign of alpha: any
/// positive diagonal for alpha >= 0, entries at least 1 for alpha < 0.
pub fn shift_dstab_compound_check(
    a: &RealMatrix,
    alpha: f64,
    d: &[f64],
    tol: Tol,
) -> Result<bool> {
    if d.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: d.len(),
        });
    }
    if !d.iter().all(|&x| x > 0.0) {
        return Err(Error::ClassMismatch(
            "shift compound check requires a positive diagonal".into(),
        ));
    }
    if alpha < 0.0 && d.iter().any(|&x| x < 1.0) {
        return Err(Error::ClassMismatch(format!(
            "alpha = {alpha} < 0 requires every diagonal entry >= 1 (class D+_{{>=1}})"
        )));
    }
    let shifted = a.scale_rows(d).sub_scalar_identity(alpha);
    if !is_q_matrix(&shifted.neg(), tol) {
        return Ok(false);
    }
    let compound = second_additive_compound(&shifted)?;
    Ok(is_q_matrix(&compound.matrix.neg(), tol))
}
