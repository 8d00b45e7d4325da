//! Second additive compound matrices. For an n x n matrix A the compound
//! acts on coordinate pairs (i, j), i < j, listed lexicographically, and its
//! spectrum is exactly the pairwise sums of eigenvalues of A.

use crate::error::{Error, Result};
use crate::linalg::matrix::RealMatrix;
use crate::linalg::rational::{Rat, RationalMatrix};

/// Lexicographic list of index pairs (i, j) with i < j.
pub fn pair_index_map(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Second additive compound of a real matrix, with its index map.
#[derive(Debug, Clone)]
pub struct CompoundMatrix {
    pub source_dim: usize,
    pub matrix: RealMatrix,
    pub pairs: Vec<(usize, usize)>,
}

#[inline]
fn delta(i: usize, j: usize) -> f64 {
    if i == j {
        1.0
    } else {
        0.0
    }
}

/// Entry of the second additive compound:
/// the 2x2 minors |a_ik d_il; a_jk d_jl| + |d_ik a_il; d_jk a_jl|
/// for row pair (i, j) and column pair (k, l).
fn compound_entry(a: &RealMatrix, (i, j): (usize, usize), (k, l): (usize, usize)) -> f64 {
    a[(i, k)] * delta(j, l) - delta(i, l) * a[(j, k)] + delta(i, k) * a[(j, l)]
        - a[(i, l)] * delta(j, k)
}

pub fn second_additive_compound(a: &RealMatrix) -> Result<CompoundMatrix> {
    let n = a.dim();
    if n < 2 {
        return Err(Error::CompoundUndefined(n));
    }
    let pairs = pair_index_map(n);
    let m = pairs.len();
    let matrix = RealMatrix::from_fn(m, |r, c| compound_entry(a, pairs[r], pairs[c]));
    Ok(CompoundMatrix {
        source_dim: n,
        matrix,
        pairs,
    })
}

/// Compound of D*A for positive diagonal D; the building block of the
/// compound-based D-stability criteria.
pub fn compound_of_product(d: &[f64], a: &RealMatrix) -> Result<CompoundMatrix> {
    if d.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: d.len(),
        });
    }
    second_additive_compound(&a.scale_rows(d))
}

/// Exact rational second additive compound, for certificate workflows.
pub fn second_additive_compound_exact(a: &RationalMatrix) -> Result<RationalMatrix> {
    let n = a.dim();
    if n < 2 {
        return Err(Error::CompoundUndefined(n));
    }
    let pairs = pair_index_map(n);
    let m = pairs.len();
    let dq = |i: usize, j: usize| -> Rat {
        if i == j {
            Rat::from_integer(1.into())
        } else {
            Rat::from_integer(0.into())
        }
    };
    Ok(RationalMatrix::from_fn(m, |r, c| {
        let (i, j) = pairs[r];
        let (k, l) = pairs[c];
        a.get(i, k) * dq(j, l) - dq(i, l) * a.get(j, k) + dq(i, k) * a.get(j, l)
            - a.get(i, l) * dq(j, k)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::eig::{eigenvalues, multiset_match};
    use num_complex::Complex64;

    #[test]
    fn two_by_two_collapses_to_trace() {
        let a = RealMatrix::from_rows(&[vec![1.5, -2.0], vec![7.0, 3.25]]).unwrap();
        let c = second_additive_compound(&a).unwrap();
        assert_eq!(c.matrix.dim(), 1);
        assert!((c.matrix[(0, 0)] - (1.5 + 3.25)).abs() < 1e-15);
    }

    #[test]
    fn diagonal_gives_pairwise_sums() {
        let a = RealMatrix::diag(&[1.0, 2.0, 3.0]);
        let c = second_additive_compound(&a).unwrap();
        assert_eq!(c.pairs, vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(c.matrix, RealMatrix::diag(&[3.0, 4.0, 5.0]));
    }

    #[test]
    fn identity_compound_is_twice_identity() {
        for n in 2..=6 {
            let c = second_additive_compound(&RealMatrix::identity(n)).unwrap();
            let m = n * (n - 1) / 2;
            assert_eq!(c.matrix, RealMatrix::identity(m).scale(2.0));
        }
    }

    #[test]
    fn spectral_law_random() {
        let mut state = 0xabcdef12u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state as f64 / u64::MAX as f64) * 2.0 - 1.0
        };
        for n in [3usize, 4, 5, 6] {
            for _ in 0..10 {
                let a = RealMatrix::from_fn(n, |_, _| next());
                let c = second_additive_compound(&a).unwrap();
                let sa = eigenvalues(&a).unwrap();
                let sc = eigenvalues(&c.matrix).unwrap();
                let mut pair_sums: Vec<Complex64> = Vec::new();
                for i in 0..n {
                    for j in (i + 1)..n {
                        pair_sums.push(sa.eigenvalues[i] + sa.eigenvalues[j]);
                    }
                }
                let tol = 1e-6 * (1.0 + a.norm_frobenius());
                assert!(
                    multiset_match(&sc.eigenvalues, &pair_sums, tol),
                    "spectral law failed n={n}"
                );
            }
        }
    }

    #[test]
    fn additive_shift_linearity() {
        let a = RealMatrix::from_rows(&[
            vec![0.0, 1.0, -2.0],
            vec![3.0, -1.0, 0.5],
            vec![0.25, 2.0, 1.0],
        ])
        .unwrap();
        let c = 0.7;
        let lhs = second_additive_compound(&a.add(&RealMatrix::identity(3).scale(c)))
            .unwrap()
            .matrix;
        let rhs = second_additive_compound(&a)
            .unwrap()
            .matrix
            .add(&RealMatrix::identity(3).scale(2.0 * c));
        assert!(lhs.sub(&rhs).max_abs() < 1e-14);
    }

    #[test]
    fn product_compound_variants() {
        let a = RealMatrix::from_rows(&[
            vec![0.0, 1.0, -2.0],
            vec![3.0, -1.0, 0.5],
            vec![0.25, 2.0, 1.0],
        ])
        .unwrap();
        let ones = vec![1.0; 3];
        let c1 = compound_of_product(&ones, &a).unwrap();
        let c2 = second_additive_compound(&a).unwrap();
        assert!(c1.matrix.sub(&c2.matrix).max_abs() < 1e-15);
        // Uniform scaling: (cA)^[2] = c * A^[2].
        let c = 2.5;
        let scaled = compound_of_product(&[c; 3], &a).unwrap();
        assert!(scaled.matrix.sub(&c2.matrix.scale(c)).max_abs() < 1e-14);
    }

    #[test]
    fn rejects_scalar_matrix() {
        let a = RealMatrix::from_rows(&[vec![5.0]]).unwrap();
        assert!(matches!(
            second_additive_compound(&a),
            Err(Error::CompoundUndefined(1))
        ));
    }

    #[test]
    fn exact_matches_float() {
        let a = RationalMatrix::from_i64_rows(&[&[0, 1, -2], &[3, -1, 1], &[2, 2, 1]]).unwrap();
        let exact = second_additive_compound_exact(&a).unwrap();
        let float = second_additive_compound(&a.to_real().unwrap()).unwrap();
        assert!(exact.to_real().unwrap().sub(&float.matrix).max_abs() < 1e-14);
    }
}
