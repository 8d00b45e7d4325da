use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::linalg::matrix::RealMatrix;
use crate::linalg::rational::{Rat, RationalMatrix};

/// Dense univariate polynomial with real coefficients, ascending degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    pub coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    /// Remainder r1*x + r0 after division by x^2 - c*x + 1.
    pub fn rem_quadratic(&self, c: f64) -> (f64, f64) {
        let mut f = self.coeffs.clone();
        for k in (2..f.len()).rev() {
            let lead = f[k];
            if lead == 0.0 {
                continue;
            }
            f[k] = 0.0;
            f[k - 1] += c * lead;
            f[k - 2] -= lead;
        }
        (f.first().copied().unwrap_or(0.0), f.get(1).copied().unwrap_or(0.0))
    }
}

/// Monic characteristic polynomial det(xI - A) via the Faddeev-LeVerrier
/// recursion on a scaled copy (keeps intermediate traces near unit size).
/// Returned coefficients are ascending; the leading one is exactly 1.
pub fn char_poly(a: &RealMatrix) -> Polynomial {
    let n = a.dim();
    let scale = a.norm_inf().max(1.0);
    let b = a.scale(1.0 / scale);
    let mut coeffs = vec![0.0; n + 1];
    coeffs[n] = 1.0;
    let mut m = b.clone();
    let mut c_prev;
    let mut pow = scale;
    // c_k = -tr(M_k)/k with M_k = B(M_{k-1} + c_{k-1} I).
    let mut ck = -(0..n).map(|i| m[(i, i)]).sum::<f64>();
    coeffs[n - 1] = ck * pow;
    for k in 2..=n {
        c_prev = ck;
        m = b.matmul(&m.sub_scalar_identity(-c_prev));
        ck = -(0..n).map(|i| m[(i, i)]).sum::<f64>() / k as f64;
        pow *= scale;
        coeffs[n - k] = ck * pow;
    }
    Polynomial { coeffs }
}

/// Exact characteristic polynomial over the rationals (ascending, monic).
pub fn char_poly_exact(a: &RationalMatrix) -> Vec<Rat> {
    let n = a.dim();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut m = a.clone();
    let trace = |m: &RationalMatrix| -> Rat {
        (0..m.dim()).fold(Rat::zero(), |acc, i| acc + m.get(i, i))
    };
    let mut ck = -trace(&m);
    coeffs[n - 1] = ck.clone();
    for k in 2..=n {
        let shifted = m.sub_scalar_identity(&-ck.clone());
        m = a.matmul(&shifted);
        ck = -trace(&m) / Rat::from_integer(k.into());
        coeffs[n - k] = ck.clone();
    }
    coeffs
}

/// Sums of principal minors E_1..E_n, recovered from the characteristic
/// polynomial coefficients (E_k = (-1)^k c_{n-k} for monic ascending c).
pub fn principal_minor_sums(a: &RealMatrix) -> Vec<f64> {
    principal_minor_sums_scaled(a)
        .into_iter()
        .map(|(v, _)| v)
        .collect()
}

/// E_1..E_n together with a per-coefficient magnitude scale: the same
/// recursion run on |A| with absolute accumulation, which tracks the
/// cancellation-free size of the quantities actually summed. Zero bands
/// are tolerance times this scale.
pub fn principal_minor_sums_scaled(a: &RealMatrix) -> Vec<(f64, f64)> {
    let n = a.dim();
    let p = char_poly(a);
    let mags = char_poly_magnitudes(a);
    (1..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            (sign * p.coeffs[n - k], mags[n - k].max(1.0))
        })
        .collect()
}

/// Magnitude envelope of the Faddeev-LeVerrier recursion: the recursion on
/// entrywise |A| with |c_k| shifts. Every true coefficient is bounded by
/// the envelope, and the envelope tracks accumulated floating-point scale.
pub(crate) fn char_poly_magnitudes(a: &RealMatrix) -> Vec<f64> {
    let n = a.dim();
    let scale = a.norm_inf().max(1.0);
    let b = RealMatrix::from_fn(n, |i, j| a[(i, j)].abs() / scale);
    let mut mags = vec![0.0; n + 1];
    mags[n] = 1.0;
    let mut m = b.clone();
    let mut pow = scale;
    let mut ck = (0..n).map(|i| m[(i, i)]).sum::<f64>();
    mags[n - 1] = ck * pow;
    for k in 2..=n {
        let shifted = m.sub_scalar_identity(-ck);
        m = b.matmul(&shifted);
        ck = (0..n).map(|i| m[(i, i)]).sum::<f64>() / k as f64;
        pow *= scale;
        mags[n - k] = ck * pow;
    }
    mags
}

pub fn principal_minor_sums_exact(a: &RationalMatrix) -> Vec<Rat> {
    let n = a.dim();
    let c = char_poly_exact(a);
    (1..=n)
        .map(|k| {
            let v = c[n - k].clone();
            if k % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect()
}

/// E_1..E_n with magnitude scales, computed from the spectrum: the
/// characteristic polynomial is rebuilt from its roots by stable
/// convolution, and the envelope uses absolute roots. Far better
/// conditioned than the trace recursion for large matrices (the compound
/// criteria reach dimension C(2n, 2)).
pub fn minor_sums_from_spectrum(a: &RealMatrix) -> crate::error::Result<Vec<(f64, f64)>> {
    let spectrum = crate::linalg::eig::eigenvalues(a)?;
    let n = a.dim();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    let mut env = vec![0.0f64; n + 1];
    coeffs[0] = Complex64::new(1.0, 0.0);
    env[0] = 1.0;
    for (idx, &r) in spectrum.eigenvalues.iter().enumerate() {
        let k = idx + 1;
        for j in (1..=k).rev() {
            coeffs[j] = coeffs[j - 1] - r * coeffs[j];
            env[j] = env[j - 1] + r.norm() * env[j];
        }
        coeffs[0] = -r * coeffs[0];
        env[0] *= r.norm();
    }
    // Ascending coefficients: coeffs[j] multiplies x^j, so
    // E_k = (-1)^k * coeffs[n - k], real up to conjugate-pairing roundoff.
    Ok((1..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            (sign * coeffs[n - k].re, env[n - k].max(1.0))
        })
        .collect())
}

/// Exact remainder of a rational-coefficient polynomial (ascending) divided
/// by x^2 - c*x + 1.
pub fn rem_quadratic_exact(coeffs: &[Rat], c: &Rat) -> (Rat, Rat) {
    let mut f: Vec<Rat> = coeffs.to_vec();
    for k in (2..f.len()).rev() {
        let lead = f[k].clone();
        if lead.is_zero() {
            continue;
        }
        f[k] = Rat::zero();
        let add = c * &lead;
        f[k - 1] += add;
        f[k - 2] -= lead;
    }
    let r0 = f.first().cloned().unwrap_or_else(Rat::zero);
    let r1 = f.get(1).cloned().unwrap_or_else(Rat::zero);
    (r0, r1)
}

/// True when every entry of the slice is positive beyond its band.
pub fn all_positive(values: &[f64], bands: &[f64]) -> bool {
    values.iter().zip(bands).all(|(v, b)| *v > *b)
}

pub fn all_positive_exact(values: &[Rat]) -> bool {
    values.iter().all(|v| v.is_positive())
}

/// Brute-force principal-minor sum oracle used by tests; enumerates all
/// C(n,k) index subsets. Exponential, for small n only.
pub fn minor_sums_by_enumeration(a: &RationalMatrix) -> Vec<Rat> {
    let n = a.dim();
    let mut sums = vec![Rat::zero(); n];
    for mask in 1u64..(1u64 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let k = idx.len();
        sums[k - 1] += a.principal_minor(&idx);
    }
    sums
}
