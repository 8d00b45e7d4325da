//! The six "forbidden boundary" conditions for conic sectors, evaluated as
//! independent computational routes for a fixed positive diagonal D and
//! cross-checked for agreement:
//!
//! 1. no eigenvalue of DA on the rays t*exp(+-i*theta), t >= 0;
//! 2. A - zD and A - conj(z)D nonsingular, z = cos(theta) + i sin(theta);
//! 3. (DA)^2 - 2cos(theta) DA has no eigenvalue -1;
//! 4. A D^-1 + D A^-1 - 2cos(theta) I nonsingular;
//! 5. det [[A, D], [-D, A - 2cos(theta) D]] nonzero;
//! 6. charpoly of DA not divisible by x^2 - 2cos(theta) x + 1.
//!
//! Each condition reports a scale-free margin; the bundle's agreement flag
//! and minimum margin let callers exclude instances that sit numerically on
//! a boundary, where distinct routes may legitimately disagree.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::complex_lu::det_shifted_diag;
use crate::linalg::eig::eigenvalues;
use crate::linalg::matrix::RealMatrix;
use crate::linalg::poly::{char_poly, char_poly_magnitudes};
use crate::tol::Tol;

#[derive(Debug, Clone, Serialize)]
pub struct BoundaryTestBundle {
    pub theta: f64,
    /// Conditions (i)..(vi) in order.
    pub conditions: [bool; 6],
    /// Scale-free positive margins; near zero means near the boundary of
    /// that condition's decision surface.
    pub margins: [f64; 6],
    /// True iff all six booleans coincide.
    pub agreement: bool,
}

impl BoundaryTestBundle {
    pub fn all_hold(&self) -> bool {
        self.conditions.iter().all(|&c| c)
    }

    pub fn min_margin(&self) -> f64 {
        self.margins.iter().cloned().fold(f64::INFINITY, f64::min)
    }
}

/// Distance from a point to the closed ray { t*u : t >= 0 } for unit u.
fn ray_distance(z: Complex64, u: Complex64) -> f64 {
    let proj = z.re * u.re + z.im * u.im;
    if proj >= 0.0 {
        (z - u * proj).norm()
    } else {
        z.norm()
    }
}

/// Evaluate the six conditions for a fixed positive diagonal `d`.
/// A must be nonsingular (Theorem precondition) and 0 < theta <= pi/2.
pub fn boundary_tests_sector(
    a: &RealMatrix,
    d: &[f64],
    theta: f64,
    tol: Tol,
) -> Result<BoundaryTestBundle> {
    let n = a.dim();
    if d.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: d.len(),
        });
    }
    if !(theta > 0.0 && theta <= std::f64::consts::FRAC_PI_2) {
        return Err(Error::InvalidSectorAngle(theta));
    }
    if !d.iter().all(|&x| x > 0.0) {
        return Err(Error::ClassMismatch(
            "boundary tests require a positive diagonal".into(),
        ));
    }
    if a.det_margin() <= tol.0 {
        return Err(Error::Singular("boundary tests require nonsingular A".into()));
    }

    let cos2 = 2.0 * crate::regions::snapped_cos(theta);
    let z = Complex64::new(0.5 * cos2, theta.sin());
    let da = a.scale_rows(d);

    // (i) ray test on sigma(DA).
    let spec_da = eigenvalues(&da)?;
    let u_plus = z;
    let u_minus = z.conj();
    let margin1 = spec_da
        .eigenvalues
        .iter()
        .map(|&lambda| {
            let dist = ray_distance(lambda, u_plus).min(ray_distance(lambda, u_minus));
            dist / (1.0 + lambda.norm())
        })
        .fold(f64::INFINITY, f64::min);

    // (ii) complex determinants of A - zD and A - conj(z)D.
    let (_, m2a) = det_shifted_diag(a, d, z);
    let (_, m2b) = det_shifted_diag(a, d, z.conj());
    let margin2 = m2a.min(m2b);

    // (iii) -1 not an eigenvalue of (DA)^2 - 2cos(theta) DA.
    let m3 = da.matmul(&da).sub(&da.scale(cos2));
    let spec3 = eigenvalues(&m3)?;
    let margin3 = spec3
        .eigenvalues
        .iter()
        .map(|&mu| (mu + 1.0).norm() / (1.0 + mu.norm()))
        .fold(f64::INFINITY, f64::min);

    // (iv) A D^-1 + D A^-1 - 2cos(theta) I nonsingular. The summands can
    // cancel, so the singularity margin is taken against the
    // cancellation-free magnitude sum rather than the result's own rows.
    let a_inv = a.inverse()?;
    let d_inv: Vec<f64> = d.iter().map(|&x| 1.0 / x).collect();
    let term1 = a.scale_cols(&d_inv);
    let term2 = a_inv.scale_rows(d);
    let m4 = term1.add(&term2).sub_scalar_identity(cos2);
    let m4_mag = term1
        .abs()
        .add(&term2.abs())
        .add(&RealMatrix::identity(n).scale(cos2.abs()));
    let margin4 = m4.det_margin_vs(&m4_mag);

    // (v) 2n x 2n block determinant.
    let ddiag = RealMatrix::diag(d);
    let block = RealMatrix::from_blocks(
        a,
        &ddiag,
        &ddiag.neg(),
        &a.sub(&ddiag.scale(cos2)),
    );
    let block_mag = RealMatrix::from_blocks(
        &a.abs(),
        &ddiag,
        &ddiag,
        &a.abs().add(&ddiag.scale(cos2.abs())),
    );
    let margin5 = block.det_margin_vs(&block_mag);

    // (vi) remainder of charpoly(DA) modulo x^2 - 2cos(theta) x + 1,
    // measured against the magnitude envelope of the same division run on
    // the coefficient envelope.
    let f = char_poly(&da);
    let (r0, r1) = f.rem_quadratic(cos2);
    let mut env = char_poly_magnitudes(&da);
    for k in (2..env.len()).rev() {
        let lead = env[k];
        env[k] = 0.0;
        env[k - 1] += cos2.abs() * lead;
        env[k - 2] += lead;
    }
    let coeff_scale = env[0].max(env[1]).max(1.0);
    let margin6 = r0.abs().max(r1.abs()) / coeff_scale;

    let margins = [margin1, margin2, margin3, margin4, margin5, margin6];
    let conditions = [
        margin1 > tol.0,
        margin2 > tol.0,
        margin3 > tol.0,
        margin4 > tol.0,
        margin5 > tol.0,
        margin6 > tol.0,
    ];
    let agreement = conditions.iter().all(|&c| c == conditions[0]);
    Ok(BoundaryTestBundle {
        theta,
        conditions,
        margins,
        agreement,
    })
}

/// The theta = pi/2 specialization: boundary is the imaginary axis.
pub fn boundary_tests_imaginary(a: &RealMatrix, d: &[f64], tol: Tol) -> Result<BoundaryTestBundle> {
    boundary_tests_sector(a, d, std::f64::consts::FRAC_PI_2, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    const TOL: Tol = Tol::DEFAULT;

    #[test]
    fn negative_identity_all_hold() {
        let a = RealMatrix::identity(3).scale(-1.0);
        for d in [vec![1.0, 1.0, 1.0], vec![0.1, 2.0, 30.0]] {
            let b = boundary_tests_sector(&a, &d, FRAC_PI_4, TOL).unwrap();
            assert!(b.agreement, "margins {:?}", b.margins);
            assert!(b.all_hold());
        }
    }

    #[test]
    fn rotation_generator_all_fail_at_right_angle() {
        // sigma(A) = {+-i} with D = I and z = i: every condition fails.
        let a = RealMatrix::from_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]).unwrap();
        let b = boundary_tests_imaginary(&a, &[1.0, 1.0], TOL).unwrap();
        assert!(b.agreement, "margins {:?}", b.margins);
        assert!(!b.conditions.iter().any(|&c| c));
    }

    #[test]
    fn singular_input_rejected() {
        let a = RealMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        assert!(matches!(
            boundary_tests_sector(&a, &[1.0, 1.0], FRAC_PI_4, TOL),
            Err(Error::Singular(_))
        ));
    }

    #[test]
    fn nonpositive_diagonal_rejected() {
        let a = RealMatrix::identity(2).scale(-1.0);
        assert!(boundary_tests_sector(&a, &[1.0, 0.0], FRAC_PI_4, TOL).is_err());
        assert!(boundary_tests_sector(&a, &[1.0, -2.0], FRAC_PI_4, TOL).is_err());
    }

    #[test]
    fn random_agreement_sweep() {
        let mut state = 0x5eed5eedu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state as f64 / u64::MAX as f64
        };
        let thetas = [
            std::f64::consts::FRAC_PI_6,
            FRAC_PI_4,
            std::f64::consts::FRAC_PI_3,
            FRAC_PI_2,
        ];
        let mut tested = 0;
        for trial in 0..200 {
            let n = 2 + trial % 4;
            let a = RealMatrix::from_fn(n, |_, _| 2.0 * next() - 1.0);
            if a.det_margin() < 1e-6 {
                continue;
            }
            let d: Vec<f64> = (0..n).map(|_| 10f64.powf(3.0 * (2.0 * next() - 1.0))).collect();
            let theta = thetas[trial % 4];
            let b = boundary_tests_sector(&a, &d, theta, TOL).unwrap();
            if b.min_margin() < 1e-7 {
                continue;
            }
            tested += 1;
            assert!(
                b.agreement,
                "disagreement: n={n} theta={theta} conditions={:?} margins={:?}",
                b.conditions, b.margins
            );
        }
        assert!(tested > 100, "too few clean instances: {tested}");
    }
}
