//! Determinantal matrix-class predicates: Q-matrix (positive sums of
//! principal minors of every order), P-matrix / P0-matrix (all principal
//! minors positive / nonnegative) and the P0+ class (P0 and Q together).
//!
//! The Q test runs in polynomial time through characteristic-polynomial
//! coefficients; P/P0 enumerate all 2^n - 1 principal minors behind a
//! dimension guard. Exact rational variants back the certificate pipeline.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::matrix::RealMatrix;
use crate::linalg::poly::{minor_sums_from_spectrum, principal_minor_sums_exact, principal_minor_sums_scaled};
use crate::linalg::rational::{format_rat, RationalMatrix};
use crate::tol::Tol;

/// Default ceiling for the 2^n principal-minor enumeration.
pub const ENUMERATION_GUARD: usize = 12;

/// First violating principal minor found by the P/P0 scan.
#[derive(Debug, Clone, Serialize)]
pub struct MinorViolation {
    pub order: usize,
    pub indices: Vec<usize>,
    /// Decimal value in floating mode, exact `p/q` in rational mode.
    pub value: String,
}

/// Aggregate class membership report.
#[derive(Debug, Clone, Serialize)]
pub struct ClassReport {
    #[serde(rename = "isQ")]
    pub is_q: bool,
    #[serde(rename = "isP")]
    pub is_p: bool,
    #[serde(rename = "isP0")]
    pub is_p0: bool,
    #[serde(rename = "isP0plus")]
    pub is_p0_plus: bool,
    #[serde(rename = "firstViolation")]
    pub first_violation: Option<MinorViolation>,
}

/// Q-matrix test: E_k(A) > 0 for k = 1..n, with E_k computed from the
/// characteristic polynomial (no minor enumeration). Values within the
/// tolerance band of the coefficient magnitude envelope count as zero.
/// The coefficients come from the spectrum (stable at compound-matrix
/// sizes); the trace recursion is the fallback if the eigensolver fails.
pub fn is_q_matrix(a: &RealMatrix, tol: Tol) -> bool {
    let sums = minor_sums_from_spectrum(a)
        .unwrap_or_else(|_| principal_minor_sums_scaled(a));
    sums.iter().all(|(e, scale)| *e > tol.0 * scale)
}

pub fn is_q_matrix_exact(a: &RationalMatrix) -> bool {
    principal_minor_sums_exact(a)
        .iter()
        .all(|e| e.is_positive())
}

fn subsets_by_order(n: usize) -> impl Iterator<Item = Vec<usize>> {
    // All nonempty index subsets ordered by cardinality, lexicographic
    // within each order, so the reported first violation is deterministic.
    (1..=n).flat_map(move |k| SubsetIter::new(n, k))
}

struct SubsetIter {
    n: usize,
    current: Option<Vec<usize>>,
}

impl SubsetIter {
    fn new(n: usize, k: usize) -> Self {
        let current = if k <= n {
            Some((0..k).collect())
        } else {
            None
        };
        Self { n, current }
    }
}

impl Iterator for SubsetIter {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.clone()?;
        let k = cur.len();
        let mut next = cur.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - (k - i) {
                next[i] += 1;
                for j in (i + 1)..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(cur)
    }
}

fn check_guard(n: usize, guard: usize) -> Result<()> {
    if n > guard {
        Err(Error::EnumerationTooLarge { n, guard })
    } else {
        Ok(())
    }
}

/// Principal minor value plus its Hadamard bound (product of row
/// 2-norms), the natural scale of determinant rounding error.
fn principal_minor_real(a: &RealMatrix, idx: &[usize]) -> (f64, f64) {
    let k = idx.len();
    let sub = RealMatrix::from_fn(k, |i, j| a[(idx[i], idx[j])]);
    let bound = (0..k)
        .map(|i| sub.row(i).iter().map(|x| x * x).sum::<f64>().sqrt())
        .product::<f64>();
    (sub.det(), bound)
}

/// P-matrix and P0-matrix test by exhaustive enumeration; short-circuits at
/// the first violation. Minors within the zero band count as zero.
pub fn p_class_scan(a: &RealMatrix, tol: Tol) -> Result<(bool, bool, Option<MinorViolation>)> {
    check_guard(a.dim(), ENUMERATION_GUARD)?;
    let mut is_p = true;
    let mut first_violation = None;
    for idx in subsets_by_order(a.dim()) {
        let (minor, bound) = principal_minor_real(a, &idx);
        let band = tol.0 * bound;
        if minor < -band {
            return Ok((
                false,
                false,
                Some(MinorViolation {
                    order: idx.len(),
                    indices: idx,
                    value: format!("{minor}"),
                }),
            ));
        }
        if minor <= band && is_p {
            is_p = false;
            first_violation = Some(MinorViolation {
                order: idx.len(),
                indices: idx,
                value: format!("{minor}"),
            });
        }
    }
    Ok((is_p, true, first_violation))
}

pub fn p_class_scan_exact(
    a: &RationalMatrix,
) -> Result<(bool, bool, Option<MinorViolation>)> {
    check_guard(a.dim(), ENUMERATION_GUARD)?;
    let mut is_p = true;
    let mut first_violation = None;
    for idx in subsets_by_order(a.dim()) {
        let minor = a.principal_minor(&idx);
        if minor.is_negative() {
            return Ok((
                false,
                false,
                Some(MinorViolation {
                    order: idx.len(),
                    indices: idx,
                    value: format_rat(&minor),
                }),
            ));
        }
        if minor.is_zero() && is_p {
            is_p = false;
            first_violation = Some(MinorViolation {
                order: idx.len(),
                indices: idx,
                value: format_rat(&minor),
            });
        }
    }
    Ok((is_p, true, first_violation))
}

pub fn is_p_matrix(a: &RealMatrix, tol: Tol) -> Result<bool> {
    Ok(p_class_scan(a, tol)?.0)
}

pub fn is_p0_matrix(a: &RealMatrix, tol: Tol) -> Result<bool> {
    Ok(p_class_scan(a, tol)?.1)
}

/// P0+ test: P0-matrix that is also a Q-matrix.
pub fn is_p0_plus_matrix(a: &RealMatrix, tol: Tol) -> Result<bool> {
    Ok(is_p0_matrix(a, tol)? && is_q_matrix(a, tol))
}

pub fn is_p_matrix_exact(a: &RationalMatrix) -> Result<bool> {
    Ok(p_class_scan_exact(a)?.0)
}

pub fn is_p0_matrix_exact(a: &RationalMatrix) -> Result<bool> {
    Ok(p_class_scan_exact(a)?.1)
}

pub fn is_p0_plus_matrix_exact(a: &RationalMatrix) -> Result<bool> {
    Ok(is_p0_matrix_exact(a)? && is_q_matrix_exact(a))
}

pub fn class_report(a: &RealMatrix, tol: Tol) -> Result<ClassReport> {
    let is_q = is_q_matrix(a, tol);
    let (is_p, is_p0, first_violation) = p_class_scan(a, tol)?;
    Ok(ClassReport {
        is_q,
        is_p,
        is_p0,
        is_p0_plus: is_p0 && is_q,
        first_violation,
    })
}

pub fn class_report_exact(a: &RationalMatrix) -> Result<ClassReport> {
    let is_q = is_q_matrix_exact(a);
    let (is_p, is_p0, first_violation) = p_class_scan_exact(a)?;
    Ok(ClassReport {
        is_q,
        is_p,
        is_p0,
        is_p0_plus: is_p0 && is_q,
        first_violation,
    })
}
