use crate::error::{Error, Result};
use crate::linalg::matrix::RealMatrix;
use crate::tol::Tol;

/// Eigenvalues of a symmetric matrix by the cyclic Jacobi method, sorted
/// ascending. The input is symmetrized first; callers that must reject
/// asymmetric input do so before calling.
pub fn symmetric_eigenvalues(s: &RealMatrix) -> Vec<f64> {
    let n = s.dim();
    let mut a = s.symmetrize();
    let scale = a.max_abs().max(f64::MIN_POSITIVE);
    let stop = 1e-15 * scale;
    for _sweep in 0..64 {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                off = off.max(a[(i, j)].abs());
            }
        }
        if off <= stop {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq.abs() <= stop * 1e-2 {
                    continue;
                }
                let app = a[(p, p)];
                let aqq = a[(q, q)];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    1.0 / (theta - (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s_ = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s_ * akq;
                    a[(k, q)] = s_ * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s_ * aqk;
                    a[(q, k)] = s_ * apk + c * aqk;
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eigs
}

fn require_symmetric(s: &RealMatrix, tol: Tol) -> Result<()> {
    let n = s.dim();
    let band = tol.band(s.max_abs());
    let mut asym = 0.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            asym = asym.max((s[(i, j)] - s[(j, i)]).abs());
        }
    }
    if asym > band {
        return Err(Error::NotSymmetric { asymmetry: asym });
    }
    Ok(())
}

/// True iff the smallest eigenvalue of the symmetric part exceeds the
/// tolerance band. Errors on input that is not symmetric within tolerance.
pub fn is_positive_definite(s: &RealMatrix, tol: Tol) -> Result<bool> {
    require_symmetric(s, tol)?;
    let eigs = symmetric_eigenvalues(s);
    let band = tol.band(s.max_abs());
    Ok(eigs[0] > band)
}

pub fn is_negative_definite(s: &RealMatrix, tol: Tol) -> Result<bool> {
    require_symmetric(s, tol)?;
    let eigs = symmetric_eigenvalues(s);
    let band = tol.band(s.max_abs());
    Ok(*eigs.last().unwrap() < -band)
}

pub fn is_positive_semidefinite(s: &RealMatrix, tol: Tol) -> Result<bool> {
    require_symmetric(s, tol)?;
    let eigs = symmetric_eigenvalues(s);
    let band = tol.band(s.max_abs());
    Ok(eigs[0] > -band)
}

/// Eigenvalues of the Hermitian matrix X + iY (X symmetric, Y
/// antisymmetric), via the real embedding [[X, -Y], [Y, X]] whose spectrum
/// is that of X + iY with every eigenvalue doubled.
pub fn hermitian_eigenvalues(x: &RealMatrix, y: &RealMatrix) -> Vec<f64> {
    let m = x.dim();
    assert_eq!(y.dim(), m, "hermitian parts dimension mismatch");
    let embedded = RealMatrix::from_blocks(x, &y.neg(), y, x);
    let all = symmetric_eigenvalues(&embedded);
    (0..m).map(|i| all[2 * i]).collect()
}
