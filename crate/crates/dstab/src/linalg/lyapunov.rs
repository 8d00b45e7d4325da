use crate::error::{Error, Result};
use crate::linalg::matrix::RealMatrix;
use crate::tol::Tol;

/// Solution of H A + A^T H = -Q with its achieved residual
/// ||H A + A^T H + Q||_F.
#[derive(Debug, Clone)]
pub struct LyapunovSolution {
    pub h: RealMatrix,
    pub residual: f64,
}

/// Solve the continuous Lyapunov equation H A + A^T H = -Q by LU on the
/// n^2 x n^2 vectorized system (A^T (x) I + I (x) A^T) vec(H) = -vec(Q).
/// Unique solvability requires sigma(A) and sigma(-A^T) disjoint; a
/// singular system is reported as a spectrum obstruction.
pub fn lyapunov_solve(a: &RealMatrix, q: &RealMatrix, tol: Tol) -> Result<LyapunovSolution> {
    let n = a.dim();
    if q.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: q.dim(),
        });
    }
    if !q.is_symmetric(tol.band(q.max_abs())) {
        return Err(Error::NotSymmetric {
            asymmetry: q.sub(&q.transpose()).max_abs(),
        });
    }
    let at = a.transpose();
    let eye = RealMatrix::identity(n);
    // Column-stacking convention: vec(HA) = (A^T (x) I) vec(H),
    // vec(A^T H) = (I (x) A^T) vec(H).
    let system = at.kron(&eye).add(&eye.kron(&at));
    let mut rhs = vec![0.0; n * n];
    for j in 0..n {
        for i in 0..n {
            rhs[j * n + i] = -q[(i, j)];
        }
    }
    let x = system
        .solve(&rhs)
        .map_err(|_| Error::SpectrumObstruction)?;
    let h = RealMatrix::from_fn(n, |i, j| x[j * n + i]).symmetrize();
    let residual = h.matmul(a).add(&at.matmul(&h)).add(q).norm_frobenius();
    Ok(LyapunovSolution { h, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::sym::is_positive_definite;

    #[test]
    fn negative_identity_case() {
        // A = -I, Q = I  =>  H = I/2.
        let sol = lyapunov_solve(
            &RealMatrix::identity(3).scale(-1.0),
            &RealMatrix::identity(3),
            Tol::DEFAULT,
        )
        .unwrap();
        assert!(sol.h.sub(&RealMatrix::identity(3).scale(0.5)).max_abs() < 1e-12);
        assert!(sol.residual < 1e-12);
    }

    #[test]
    fn diagonal_case() {
        // A = diag(-1,-2), Q = I  =>  H = diag(1/2, 1/4).
        let sol = lyapunov_solve(
            &RealMatrix::diag(&[-1.0, -2.0]),
            &RealMatrix::identity(2),
            Tol::DEFAULT,
        )
        .unwrap();
        assert!(sol.h.sub(&RealMatrix::diag(&[0.5, 0.25])).max_abs() < 1e-12);
    }

    #[test]
    fn random_hurwitz_residual_and_definiteness() {
        let mut state = 42u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state as f64 / u64::MAX as f64) * 2.0 - 1.0
        };
        for _ in 0..10 {
            // Hurwitz by construction: G - 5I with ||G|| modest.
            let g = RealMatrix::from_fn(5, |_, _| next());
            let a = g.sub(&RealMatrix::identity(5).scale(5.0));
            let q = RealMatrix::identity(5);
            let sol = lyapunov_solve(&a, &q, Tol::DEFAULT).unwrap();
            let scale = a.norm_frobenius() * sol.h.norm_frobenius() + q.norm_frobenius();
            assert!(sol.residual <= 1e-9 * scale, "residual {}", sol.residual);
            assert!(is_positive_definite(&sol.h, Tol::DEFAULT).unwrap());
        }
    }

    #[test]
    fn spectrum_obstruction_detected() {
        // A = diag(1, -1): sigma(A) meets sigma(-A^T), system singular.
        let a = RealMatrix::diag(&[1.0, -1.0]);
        let q = RealMatrix::identity(2);
        assert!(matches!(
            lyapunov_solve(&a, &q, Tol::DEFAULT),
            Err(Error::SpectrumObstruction)
        ));
    }
}
