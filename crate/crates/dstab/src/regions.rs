//! Unbounded LMI regions given by generating matrices (L, M): membership
//! and boundary classification, the named half-plane / shifted / sector
//! constructors, and the negative-real-axis recession test.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::eig::Spectrum;
use crate::linalg::matrix::RealMatrix;
use crate::linalg::sym::{hermitian_eigenvalues, is_positive_semidefinite};
use crate::tol::Tol;

/// cos(theta) with the representable right angle snapped to exactly zero,
/// so the sector at theta = pi/2 degenerates to the half-plane with exact
/// generating matrices.
pub(crate) fn snapped_cos(theta: f64) -> f64 {
    if (theta - std::f64::consts::FRAC_PI_2).abs() <= f64::EPSILON {
        0.0
    } else {
        theta.cos()
    }
}

/// Tag for the named region families plus the general (L, M) case.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum RegionKind {
    LeftHalfPlane,
    ShiftedHalfPlane { alpha: f64 },
    Sector { theta: f64 },
    General,
}

/// A region { z : L + zM + conj(z)M^T negative definite }. Open by
/// construction; boundary points are where the characteristic function
/// becomes singular while staying negative semidefinite.
#[derive(Debug, Clone)]
pub struct LmiRegion {
    pub kind: RegionKind,
    l: RealMatrix,
    m: RealMatrix,
    /// Max entry change applied when symmetrizing L on ingestion.
    symmetrization_delta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MembershipStatus {
    Inside,
    OnBoundary,
    Outside,
}

/// Classification of one point, with the signed margin
/// (largest eigenvalue of the characteristic-function value, negated;
/// positive means strictly inside).
#[derive(Debug, Clone, Copy)]
pub struct RegionMembership {
    pub status: MembershipStatus,
    pub margin: f64,
}

impl LmiRegion {
    /// The open left half-plane, characteristic function z + conj(z).
    pub fn half_plane() -> Self {
        Self {
            kind: RegionKind::LeftHalfPlane,
            l: RealMatrix::zeros(1),
            m: RealMatrix::identity(1),
            symmetrization_delta: 0.0,
        }
    }

    /// { Re z < alpha }, characteristic function z + conj(z) - 2 alpha.
    pub fn shifted_half_plane(alpha: f64) -> Self {
        Self {
            kind: RegionKind::ShiftedHalfPlane { alpha },
            l: RealMatrix::diag(&[-2.0 * alpha]),
            m: RealMatrix::identity(1),
            symmetrization_delta: 0.0,
        }
    }

    /// Open cone of half-angle theta about the negative real axis,
    /// 0 < theta <= pi/2 (theta = pi/2 is the half-plane limit).
    pub fn sector(theta: f64) -> Result<Self> {
        if !(theta > 0.0 && theta <= std::f64::consts::FRAC_PI_2) {
            return Err(Error::InvalidSectorAngle(theta));
        }
        let (s, c) = (theta.sin(), snapped_cos(theta));
        let m = RealMatrix::from_rows(&[vec![s, c], vec![-c, s]]).expect("2x2");
        Ok(Self {
            kind: RegionKind::Sector { theta },
            l: RealMatrix::zeros(2),
            m,
            symmetrization_delta: 0.0,
        })
    }

    /// General region from generating matrices. L is symmetrized on
    /// ingestion; the applied change is recorded and can be compared
    /// against a tolerance by the caller.
    pub fn general(l: RealMatrix, m: RealMatrix) -> Result<Self> {
        if l.dim() != m.dim() {
            return Err(Error::DimensionMismatch {
                expected: l.dim(),
                got: m.dim(),
            });
        }
        let sym = l.symmetrize();
        let delta = sym.sub(&l).max_abs();
        Ok(Self {
            kind: RegionKind::General,
            l: sym,
            m,
            symmetrization_delta: delta,
        })
    }

    pub fn order(&self) -> usize {
        self.l.dim()
    }

    pub fn generating_l(&self) -> &RealMatrix {
        &self.l
    }

    pub fn generating_m(&self) -> &RealMatrix {
        &self.m
    }

    pub fn symmetrization_delta(&self) -> f64 {
        self.symmetrization_delta
    }

    /// Largest eigenvalue of the Hermitian value L + zM + conj(z)M^T.
    pub fn char_fn_max_eig(&self, z: Complex64) -> f64 {
        let mt = self.m.transpose();
        // L + zM + conj(z)M^T = [L + x(M + M^T)] + i [y(M - M^T)]
        let x_part = self.l.add(&self.m.add(&mt).scale(z.re));
        let y_part = self.m.sub(&mt).scale(z.im);
        let eigs = hermitian_eigenvalues(&x_part, &y_part);
        *eigs.last().expect("nonempty region order")
    }

    /// Membership with boundary band |max eig| <= tol * (1 + |z|).
    pub fn contains(&self, z: Complex64, tol: Tol) -> RegionMembership {
        let max_eig = self.char_fn_max_eig(z);
        let band = tol.0 * (1.0 + z.norm());
        let status = if max_eig < -band {
            MembershipStatus::Inside
        } else if max_eig <= band {
            MembershipStatus::OnBoundary
        } else {
            MembershipStatus::Outside
        };
        RegionMembership {
            status,
            margin: -max_eig,
        }
    }

    /// True iff the negative real ray is a recession direction, i.e.
    /// M + M^T is positive semidefinite.
    pub fn has_recession_negative_real_axis(&self, tol: Tol) -> bool {
        let sym = self.m.add(&self.m.transpose());
        is_positive_semidefinite(&sym, tol).expect("symmetrized matrix")
    }

    /// Whether zero lies in the closure of the region (decides the default
    /// admissible diagonal class).
    pub fn zero_in_closure(&self, tol: Tol) -> bool {
        self.contains(Complex64::new(0.0, 0.0), tol).status != MembershipStatus::Outside
    }
}

/// Outcome of classifying a whole spectrum against a region.
#[derive(Debug, Clone)]
pub struct SpectrumLocation {
    pub all_inside: bool,
    pub inside: Vec<Complex64>,
    pub boundary_hits: Vec<Complex64>,
    pub outside: Vec<Complex64>,
}

pub fn spectrum_in_region(spectrum: &Spectrum, region: &LmiRegion, tol: Tol) -> SpectrumLocation {
    let mut inside = Vec::new();
    let mut boundary_hits = Vec::new();
    let mut outside = Vec::new();
    for &z in &spectrum.eigenvalues {
        match region.contains(z, tol).status {
            MembershipStatus::Inside => inside.push(z),
            MembershipStatus::OnBoundary => boundary_hits.push(z),
            MembershipStatus::Outside => outside.push(z),
        }
    }
    SpectrumLocation {
        all_inside: boundary_hits.is_empty() && outside.is_empty(),
        inside,
        boundary_hits,
        outside,
    }
}
