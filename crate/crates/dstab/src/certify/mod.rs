//! Exact polynomial certificates over the rationals: parametric block
//! determinants in the diagonal variables d_1..d_n, the denominator-cleared
//! parametric characteristic polynomial of A D^-1 + D A^-1, and the
//! one-signed-coefficient orthant-positivity test that turns either into a
//! certificate of boundary regularity for every positive diagonal D.

pub mod multipoly;

use num_traits::Zero;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linalg::rational::{format_rat, Rat, RationalMatrix};
pub use multipoly::{poly_det, MultiPoly};

/// Ceiling on the symbolic determinant dimension (the block determinant is
/// 2n x 2n and the subset DP is exponential).
pub const SYMBOLIC_GUARD: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PositivityStatus {
    NonvanishingOnOrthant,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PositivityReason {
    AllCoefficientsPositive,
    AllCoefficientsNegative,
    MixedSigns,
}

/// Outcome of the one-sign orthant test. Sufficient only: a polynomial
/// whose nonzero coefficients all share one sign cannot vanish for
/// d_1..d_n > 0; mixed signs yield an honest `Inconclusive`.
#[derive(Debug, Clone, Serialize)]
pub struct PositivityCertificate {
    pub status: PositivityStatus,
    pub reason: PositivityReason,
    pub constant_term: String,
}

fn check_guard(n: usize) -> Result<()> {
    if n > SYMBOLIC_GUARD {
        return Err(Error::SymbolicGuard {
            n,
            guard: SYMBOLIC_GUARD,
        });
    }
    Ok(())
}

/// The exact determinant of the 2n x 2n block matrix
/// [[A, D], [-D, A - 2cos(theta) D]] as a polynomial in d_1..d_n, with
/// 2cos(theta) supplied as an exact rational. Its nonvanishing on the open
/// positive orthant is the universal boundary condition (v).
#[allow(clippy::needless_range_loop)]
pub fn parametric_block_det(a: &RationalMatrix, cos2theta: &Rat) -> Result<MultiPoly> {
    let n = a.dim();
    check_guard(n)?;
    if a.det().is_zero() {
        return Err(Error::Singular("parametric block determinant".into()));
    }
    let m = 2 * n;
    let mut entries = vec![vec![MultiPoly::zero(n); m]; m];
    for i in 0..n {
        for j in 0..n {
            // top-left A, bottom-right A (- 2cos(theta) D on the diagonal)
            entries[i][j] = MultiPoly::constant(n, a.get(i, j).clone());
            entries[n + i][n + j] = MultiPoly::constant(n, a.get(i, j).clone());
        }
        // top-right D, bottom-left -D
        entries[i][n + i] = MultiPoly::var_d(n, i);
        entries[n + i][i] = MultiPoly::var_d(n, i).neg();
        let shift = MultiPoly::var_d(n, i).scale(&-cos2theta.clone());
        entries[n + i][n + i] = entries[n + i][n + i].add(&shift);
    }
    Ok(poly_det(&entries))
}

/// The denominator-cleared parametric characteristic polynomial of
/// A D^-1 + D A^-1: computes det(X*AD - A^2 - A D A^-1 D) exactly, which
/// equals det(A) * (prod d_i) * det(X*I - A D^-1 - D A^-1).
#[allow(clippy::needless_range_loop)]
pub fn parametric_charpoly_sum(a: &RationalMatrix) -> Result<MultiPoly> {
    let n = a.dim();
    check_guard(n)?;
    if a.det().is_zero() {
        return Err(Error::Singular("parametric characteristic polynomial".into()));
    }
    let a_inv = a.inverse()?;
    let a_sq = a.matmul(a);
    let mut entries = vec![vec![MultiPoly::zero(n); n]; n];
    for i in 0..n {
        for j in 0..n {
            // X * (AD)_{ij} = X * a_ij * d_j
            let mut e = MultiPoly::var_x(n)
                .mul(&MultiPoly::var_d(n, j))
                .scale(a.get(i, j));
            // - (A^2)_{ij}
            e = e.sub(&MultiPoly::constant(n, a_sq.get(i, j).clone()));
            // - (A D A^-1 D)_{ij} = - d_j * sum_k a_ik (A^-1)_kj d_k
            for k in 0..n {
                let coef = a.get(i, k) * a_inv.get(k, j);
                if coef.is_zero() {
                    continue;
                }
                let term = MultiPoly::var_d(n, k)
                    .mul(&MultiPoly::var_d(n, j))
                    .scale(&coef);
                e = e.sub(&term);
            }
            entries[i][j] = e;
        }
    }
    Ok(poly_det(&entries))
}

/// Exact parametric characteristic polynomial of D*A in the diagonal
/// variables, via Faddeev-LeVerrier over the polynomial ring. Returns
/// ascending coefficients c_0..c_n with c_n = 1; feeds the divisibility
/// route (vi).
#[allow(clippy::type_complexity, clippy::needless_range_loop)]
pub fn parametric_charpoly_da(a: &RationalMatrix) -> Result<Vec<MultiPoly>> {
    let n = a.dim();
    check_guard(n)?;
    // DA entries: (DA)_{ij} = d_i a_ij.
    let da: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| MultiPoly::var_d(n, i).scale(a.get(i, j)))
                .collect()
        })
        .collect();
    let matmul = |x: &Vec<Vec<MultiPoly>>, y: &Vec<Vec<MultiPoly>>| -> Vec<Vec<MultiPoly>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = MultiPoly::zero(n);
                        for k in 0..n {
                            if !x[i][k].is_zero() && !y[k][j].is_zero() {
                                acc = acc.add(&x[i][k].mul(&y[k][j]));
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    };
    let trace = |x: &Vec<Vec<MultiPoly>>| -> MultiPoly {
        let mut acc = MultiPoly::zero(n);
        for i in 0..n {
            acc = acc.add(&x[i][i]);
        }
        acc
    };
    let add_scalar = |x: &Vec<Vec<MultiPoly>>, s: &MultiPoly| -> Vec<Vec<MultiPoly>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { x[i][j].add(s) } else { x[i][j].clone() })
                    .collect()
            })
            .collect()
    };

    let mut coeffs = vec![MultiPoly::zero(n); n + 1];
    coeffs[n] = MultiPoly::one(n);
    let mut m = da.clone();
    let mut ck = trace(&m).neg();
    coeffs[n - 1] = ck.clone();
    for k in 2..=n {
        let shifted = add_scalar(&m, &ck);
        m = matmul(&da, &shifted);
        ck = trace(&m).scale(&Rat::new((-1).into(), (k as i64).into()));
        coeffs[n - k] = ck.clone();
    }
    Ok(coeffs)
}

/// Remainder (r0, r1) of a polynomial in lambda with MultiPoly
/// coefficients (ascending) after division by lambda^2 - 2cos(theta)
/// lambda + 1. Divisibility at a specific D happens exactly when both
/// remainder polynomials vanish there.
pub fn divisibility_remainder(
    charpoly: &[MultiPoly],
    cos2theta: &Rat,
) -> (MultiPoly, MultiPoly) {
    assert!(!charpoly.is_empty());
    let n_diag = charpoly[0].n_diag();
    let mut f: Vec<MultiPoly> = charpoly.to_vec();
    for k in (2..f.len()).rev() {
        if f[k].is_zero() {
            continue;
        }
        let lead = std::mem::replace(&mut f[k], MultiPoly::zero(n_diag));
        f[k - 1] = f[k - 1].add(&lead.scale(cos2theta));
        f[k - 2] = f[k - 2].sub(&lead);
    }
    let r0 = f.first().cloned().unwrap_or_else(|| MultiPoly::zero(n_diag));
    let r1 = f.get(1).cloned().unwrap_or_else(|| MultiPoly::zero(n_diag));
    (r0, r1)
}

/// One-sign coefficient test. `NonvanishingOnOrthant` means the polynomial
/// cannot be zero anywhere on the open positive orthant.
pub fn orthant_positivity(poly: &MultiPoly) -> PositivityCertificate {
    let (pos, neg) = poly.sign_census();
    let constant_term = format_rat(&poly.constant_term());
    let (status, reason) = if poly.is_zero() {
        (PositivityStatus::Inconclusive, PositivityReason::MixedSigns)
    } else if neg == 0 {
        (
            PositivityStatus::NonvanishingOnOrthant,
            PositivityReason::AllCoefficientsPositive,
        )
    } else if pos == 0 {
        (
            PositivityStatus::NonvanishingOnOrthant,
            PositivityReason::AllCoefficientsNegative,
        )
    } else {
        (PositivityStatus::Inconclusive, PositivityReason::MixedSigns)
    };
    PositivityCertificate {
        status,
        reason,
        constant_term,
    }
}

/// One serialized certificate term.
#[derive(Debug, Clone, Serialize)]
pub struct CertTerm {
    pub exp: Vec<u16>,
    pub coef: String,
}

/// Self-contained certificate file: the polynomial (graded-lex term
/// order), what it certifies, and the positivity verdict. Referenced from
/// verdicts by content hash.
#[derive(Debug, Clone, Serialize)]
pub struct CertificateDocument {
    pub schema: &'static str,
    pub claim: String,
    pub variables: Vec<String>,
    pub terms: Vec<CertTerm>,
    pub status: PositivityStatus,
    pub reason: PositivityReason,
    pub constant_term: String,
    /// 2cos(theta) for sector certificates ("0" is the half-plane).
    pub cos2theta: String,
    pub matrix: Vec<Vec<String>>,
}

impl CertificateDocument {
    pub fn new(
        claim: impl Into<String>,
        a: &RationalMatrix,
        cos2theta: &Rat,
        poly: &MultiPoly,
        positivity: &PositivityCertificate,
    ) -> Self {
        let n = poly.n_diag();
        let mut variables: Vec<String> = (1..=n).map(|i| format!("d{i}")).collect();
        variables.push("X".into());
        let terms = poly
            .terms()
            .map(|(m, c)| CertTerm {
                exp: m.0.clone(),
                coef: format_rat(c),
            })
            .collect();
        let matrix = a
            .rows()
            .iter()
            .map(|row| row.iter().map(format_rat).collect())
            .collect();
        CertificateDocument {
            schema: "dstab-certificate/1",
            claim: claim.into(),
            variables,
            terms,
            status: positivity.status,
            reason: positivity.reason,
            constant_term: positivity.constant_term.clone(),
            cos2theta: format_rat(cos2theta),
            matrix,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialization")
    }

    /// Content hash used as the certificate id in verdicts and reports.
    pub fn content_hash(&self) -> String {
        let canonical = serde_json::to_string(self).expect("certificate serialization");
        hex::encode(Sha256::digest(canonical.as_bytes()))
    }
}
