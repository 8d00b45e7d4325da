//! Generalized Lyapunov verification for LMI regions and the reductions
//! from shifted half-planes and sectors to plain Hurwitz problems.

use crate::error::{Error, Result};
use crate::linalg::eig::eigenvalues;
use crate::linalg::lyapunov::lyapunov_solve;
use crate::linalg::matrix::RealMatrix;
use crate::linalg::sym::{is_negative_definite, is_positive_definite};
use crate::regions::{spectrum_in_region, LmiRegion, RegionKind};
use crate::tol::Tol;

/// A - alpha*I: Hurwitz stability of the result is equivalent to the
/// spectrum of A lying in the shifted half-plane { Re z < alpha }.
pub fn shift_reduce(a: &RealMatrix, alpha: f64) -> RealMatrix {
    a.sub_scalar_identity(alpha)
}

/// The 2n x 2n block matrix [[sin(t)A, -cos(t)A], [cos(t)A, sin(t)A]] whose
/// Hurwitz stability is equivalent to sector stability of A: its spectrum
/// is e^{+-i(pi/2 - theta)} * sigma(A).
pub fn sector_embedding(a: &RealMatrix, theta: f64) -> Result<RealMatrix> {
    if !(theta > 0.0 && theta <= std::f64::consts::FRAC_PI_2) {
        return Err(Error::InvalidSectorAngle(theta));
    }
    let (s, c) = (theta.sin(), crate::regions::snapped_cos(theta));
    Ok(RealMatrix::from_blocks(
        &a.scale(s),
        &a.scale(-c),
        &a.scale(c),
        &a.scale(s),
    ))
}

/// Block doubling diag(D, D) used by the sector compound criterion.
pub fn double_diag(d: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(2 * d.len());
    out.extend_from_slice(d);
    out.extend_from_slice(d);
    out
}

/// Check a supplied Lyapunov certificate against a region: H must be
/// symmetric positive definite and
/// W = L (x) H + M (x) (HA) + M^T (x) (A^T H) negative definite.
///
/// For sector regions a 2n x 2n certificate is also accepted; it is
/// verified as a plain Lyapunov certificate for the sector embedding.
pub fn verify_lyapunov(region: &LmiRegion, a: &RealMatrix, h: &RealMatrix, tol: Tol) -> Result<bool> {
    let n = a.dim();
    if h.dim() == 2 * n {
        if let RegionKind::Sector { theta } = region.kind {
            let embedded = sector_embedding(a, theta)?;
            let half = LmiRegion::half_plane();
            return verify_lyapunov(&half, &embedded, h, tol);
        }
    }
    if h.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: h.dim(),
        });
    }
    if !is_positive_definite(h, tol)? {
        return Ok(false);
    }
    let ha = h.matmul(a);
    let ath = a.transpose().matmul(h);
    let w = region
        .generating_l()
        .kron(h)
        .add(&region.generating_m().kron(&ha))
        .add(&region.generating_m().transpose().kron(&ath));
    is_negative_definite(&w, tol)
}

/// Construct a Lyapunov certificate for the three named region families by
/// reducing to a standard Lyapunov equation with Q = I:
/// half-plane solves for A itself, the shifted half-plane for A - alpha*I,
/// and the sector for the 2n-dimensional sector embedding.
/// Returns None when the reduced matrix is not Hurwitz.
pub fn lyapunov_certificate(
    region: &LmiRegion,
    a: &RealMatrix,
    tol: Tol,
) -> Result<Option<RealMatrix>> {
    let reduced = match region.kind {
        RegionKind::LeftHalfPlane => a.clone(),
        RegionKind::ShiftedHalfPlane { alpha } => shift_reduce(a, alpha),
        RegionKind::Sector { theta } => sector_embedding(a, theta)?,
        RegionKind::General => {
            return Err(Error::Unsupported(
                "general LMI feasibility search is out of scope; supply H and use verify".into(),
            ))
        }
    };
    let spectrum = eigenvalues(&reduced)?;
    let half = LmiRegion::half_plane();
    if !spectrum_in_region(&spectrum, &half, tol).all_inside {
        return Ok(None);
    }
    let sol = lyapunov_solve(&reduced, &RealMatrix::identity(reduced.dim()), tol)?;
    Ok(Some(sol.h))
}
