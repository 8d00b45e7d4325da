use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::matrix::RealMatrix;

/// Complex scalar used for spectra and region points.
pub type ComplexScalar = Complex64;

/// Eigenvalue multiset of a real matrix together with a backward-error
/// estimate. For real input the list is closed under conjugation by
/// construction (complex eigenvalues come out of 2x2 Schur blocks in exact
/// conjugate pairs).
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub eigenvalues: Vec<ComplexScalar>,
    /// Estimated backward error: the computed eigenvalues are exact for some
    /// A + E with ||E|| of this order.
    pub residual: f64,
}

impl Spectrum {
    pub fn max_re(&self) -> f64 {
        self.eigenvalues
            .iter()
            .map(|z| z.re)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Multiset match against another eigenvalue list within `tol`
    /// (greedy nearest-neighbour pairing).
    pub fn matches_multiset(&self, other: &[ComplexScalar], tol: f64) -> bool {
        multiset_match(&self.eigenvalues, other, tol)
    }
}

pub fn multiset_match(a: &[ComplexScalar], b: &[ComplexScalar], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    for z in a {
        let mut best: Option<(usize, f64)> = None;
        for (j, w) in b.iter().enumerate() {
            if used[j] {
                continue;
            }
            let d = (z - w).norm();
            if best.is_none_or(|(_, bd)| d < bd) {
                best = Some((j, d));
            }
        }
        match best {
            Some((j, d)) if d <= tol => used[j] = true,
            _ => return false,
        }
    }
    true
}

/// Eigenvalues of a real square matrix via balancing, Householder
/// Hessenberg reduction and Francis double-shift QR iteration.
pub fn eigenvalues(a: &RealMatrix) -> Result<Spectrum> {
    let n = a.dim();
    let residual = 16.0 * (n as f64) * f64::EPSILON * a.norm_frobenius().max(f64::MIN_POSITIVE);
    if n == 1 {
        return Ok(Spectrum {
            eigenvalues: vec![Complex64::new(a[(0, 0)], 0.0)],
            residual,
        });
    }
    let mut h = a.clone();
    balance(&mut h);
    hessenberg(&mut h);
    let (re, im) = francis_qr(&mut h)?;
    let mut eigenvalues: Vec<Complex64> = re
        .into_iter()
        .zip(im)
        .map(|(r, i)| Complex64::new(r, i))
        .collect();
    eigenvalues.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    Ok(Spectrum {
        eigenvalues,
        residual,
    })
}

/// Diagonal similarity scaling by powers of two to equalize row/column
/// norms (EISPACK `balanc`). Exact: eigenvalues are unchanged.
fn balance(a: &mut RealMatrix) {
    let n = a.dim();
    let radix = 2.0f64;
    let sq = radix * radix;
    loop {
        let mut converged = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[(j, i)].abs();
                    r += a[(i, j)].abs();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let mut f = 1.0;
            let s = c + r;
            let mut c_s = c;
            let mut g = r / radix;
            while c_s < g {
                f *= radix;
                c_s *= sq;
            }
            g = r * radix;
            while c_s >= g {
                f /= radix;
                c_s /= sq;
            }
            if (c_s + r) / f < 0.95 * s {
                let ginv = 1.0 / f;
                converged = false;
                for j in 0..n {
                    a[(i, j)] *= ginv;
                }
                for j in 0..n {
                    a[(j, i)] *= f;
                }
            }
        }
        if converged {
            break;
        }
    }
}

/// In-place Householder reduction to upper Hessenberg form (no transform
/// accumulation; only eigenvalues are needed downstream).
fn hessenberg(a: &mut RealMatrix) {
    let n = a.dim();
    let mut ort = vec![0.0; n];
    for m in 1..n.saturating_sub(1) {
        let mut scale = 0.0;
        for i in m..n {
            scale += a[(i, m - 1)].abs();
        }
        if scale == 0.0 {
            continue;
        }
        let mut h = 0.0;
        for i in (m..n).rev() {
            ort[i] = a[(i, m - 1)] / scale;
            h += ort[i] * ort[i];
        }
        let mut g = h.sqrt();
        if ort[m] > 0.0 {
            g = -g;
        }
        h -= ort[m] * g;
        ort[m] -= g;

        // Apply Householder similarity transform H = (I - u u^T / h) A (I - u u^T / h).
        for j in m..n {
            let mut f = 0.0;
            for i in (m..n).rev() {
                f += ort[i] * a[(i, j)];
            }
            f /= h;
            for i in m..n {
                a[(i, j)] -= f * ort[i];
            }
        }
        for i in 0..n {
            let mut f = 0.0;
            for j in (m..n).rev() {
                f += ort[j] * a[(i, j)];
            }
            f /= h;
            for j in m..n {
                a[(i, j)] -= f * ort[j];
            }
        }
        a[(m, m - 1)] = scale * g;
        for i in (m + 1)..n {
            a[(i, m - 1)] = 0.0;
        }
    }
}

/// Francis double-shift QR on an upper Hessenberg matrix, returning
/// eigenvalue real/imaginary parts. Ported from the classic EISPACK `hqr`
/// scheme with Wilkinson exceptional shifts and a hard iteration cap.
fn francis_qr(hm: &mut RealMatrix) -> Result<(Vec<f64>, Vec<f64>)> {
    let nn = hm.dim();
    let mut d = vec![0.0; nn];
    let mut e = vec![0.0; nn];
    let mut n = nn as isize - 1;
    let low: isize = 0;
    let eps = f64::EPSILON;
    let mut exshift = 0.0;
    let (mut p, mut q, mut r): (f64, f64, f64) = (0.0, 0.0, 0.0);
    let (mut s, mut z): (f64, f64);
    let (mut x, mut y, mut w): (f64, f64, f64);

    let mut norm = 0.0;
    for i in 0..nn {
        for j in i.saturating_sub(1)..nn {
            norm += hm[(i, j)].abs();
        }
    }
    if norm == 0.0 {
        return Ok((d, e));
    }

    let mut iter = 0usize;
    let mut total_iter = 0usize;
    let max_total = 50 * nn.max(4);
    while n >= low {
        let h = |m: &RealMatrix, i: isize, j: isize| m[(i as usize, j as usize)];

        // Look for a single small subdiagonal element.
        let mut l = n;
        while l > low {
            s = h(hm, l - 1, l - 1).abs() + h(hm, l, l).abs();
            if s == 0.0 {
                s = norm;
            }
            if h(hm, l, l - 1).abs() < eps * s {
                break;
            }
            l -= 1;
        }

        if l == n {
            // One real root found.
            let v = h(hm, n, n) + exshift;
            hm[(n as usize, n as usize)] = v;
            d[n as usize] = v;
            e[n as usize] = 0.0;
            n -= 1;
            iter = 0;
        } else if l == n - 1 {
            // Two roots found (real pair or complex conjugate pair).
            w = h(hm, n, n - 1) * h(hm, n - 1, n);
            p = (h(hm, n - 1, n - 1) - h(hm, n, n)) / 2.0;
            q = p * p + w;
            z = q.abs().sqrt();
            let xnew = h(hm, n, n) + exshift;
            hm[(n as usize, n as usize)] = xnew;
            hm[((n - 1) as usize, (n - 1) as usize)] = h(hm, n - 1, n - 1) + exshift;
            x = xnew;
            if q >= 0.0 {
                z = if p >= 0.0 { p + z } else { p - z };
                d[(n - 1) as usize] = x + z;
                d[n as usize] = d[(n - 1) as usize];
                if z != 0.0 {
                    d[n as usize] = x - w / z;
                }
                e[(n - 1) as usize] = 0.0;
                e[n as usize] = 0.0;
            } else {
                d[(n - 1) as usize] = x + p;
                d[n as usize] = x + p;
                e[(n - 1) as usize] = z;
                e[n as usize] = -z;
            }
            n -= 2;
            iter = 0;
        } else {
            // No convergence yet: form shift and run a double QR step.
            x = h(hm, n, n);
            y = 0.0;
            w = 0.0;
            if l < n {
                y = h(hm, n - 1, n - 1);
                w = h(hm, n, n - 1) * h(hm, n - 1, n);
            }
            if iter == 10 || iter == 20 {
                // Wilkinson's exceptional shift.
                exshift += x;
                for i in low..=n {
                    let v = h(hm, i, i) - x;
                    hm[(i as usize, i as usize)] = v;
                }
                s = h(hm, n, n - 1).abs() + h(hm, n - 1, n - 2).abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            iter += 1;
            total_iter += 1;
            if iter > 40 || total_iter > max_total {
                let partial = ((n + 1) as usize..nn)
                    .map(|i| (d[i], e[i]))
                    .collect();
                return Err(Error::EigenNonConvergence {
                    iterations: total_iter,
                    n: nn,
                    partial,
                });
            }

            // Look for two consecutive small subdiagonal elements.
            let mut m = n - 2;
            while m >= l {
                z = h(hm, m, m);
                r = x - z;
                s = y - z;
                p = (r * s - w) / h(hm, m + 1, m) + h(hm, m, m + 1);
                q = h(hm, m + 1, m + 1) - z - r - s;
                r = h(hm, m + 2, m + 1);
                s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                if h(hm, m, m - 1).abs() * (q.abs() + r.abs())
                    < eps
                        * (p.abs()
                            * (h(hm, m - 1, m - 1).abs() + z.abs() + h(hm, m + 1, m + 1).abs()))
                {
                    break;
                }
                m -= 1;
            }
            let mut i = m + 2;
            while i <= n {
                hm[(i as usize, (i - 2) as usize)] = 0.0;
                if i > m + 2 {
                    hm[(i as usize, (i - 3) as usize)] = 0.0;
                }
                i += 1;
            }

            // Double QR step on rows l..n, columns m..n.
            let mut k = m;
            while k < n {
                let notlast = k != n - 1;
                if k != m {
                    p = h(hm, k, k - 1);
                    q = h(hm, k + 1, k - 1);
                    r = if notlast { h(hm, k + 2, k - 1) } else { 0.0 };
                    x = p.abs() + q.abs() + r.abs();
                    if x == 0.0 {
                        k += 1;
                        continue;
                    }
                    p /= x;
                    q /= x;
                    r /= x;
                }
                s = (p * p + q * q + r * r).sqrt();
                if p < 0.0 {
                    s = -s;
                }
                if s != 0.0 {
                    if k != m {
                        hm[(k as usize, (k - 1) as usize)] = -s * x;
                    } else if l != m {
                        let v = -h(hm, k, k - 1);
                        hm[(k as usize, (k - 1) as usize)] = v;
                    }
                    p += s;
                    x = p / s;
                    y = q / s;
                    z = r / s;
                    q /= p;
                    r /= p;

                    for j in (k as usize)..nn {
                        let mut pj = hm[(k as usize, j)] + q * hm[((k + 1) as usize, j)];
                        if notlast {
                            pj += r * hm[((k + 2) as usize, j)];
                            hm[((k + 2) as usize, j)] -= pj * z;
                        }
                        hm[(k as usize, j)] -= pj * x;
                        hm[((k + 1) as usize, j)] -= pj * y;
                    }
                    let upper = if n < k + 3 { n } else { k + 3 };
                    for i in 0..=(upper as usize) {
                        let mut pi =
                            x * hm[(i, k as usize)] + y * hm[(i, (k + 1) as usize)];
                        if notlast {
                            pi += z * hm[(i, (k + 2) as usize)];
                            hm[(i, (k + 2) as usize)] -= pi * r;
                        }
                        hm[(i, k as usize)] -= pi;
                        hm[(i, (k + 1) as usize)] -= pi * q;
                    }
                }
                k += 1;
            }
        }
    }
    Ok((d, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn identity_spectrum() {
        let s = eigenvalues(&RealMatrix::identity(3)).unwrap();
        assert_eq!(s.eigenvalues.len(), 3);
        for z in &s.eigenvalues {
            assert!(close(*z, Complex64::new(1.0, 0.0), 1e-12));
        }
    }

    #[test]
    fn rotation_generator_spectrum() {
        let a = RealMatrix::from_rows(&[vec![0.0, 1.0], vec![-1.0, 0.0]]).unwrap();
        let s = eigenvalues(&a).unwrap();
        assert!(s.matches_multiset(
            &[Complex64::new(0.0, 1.0), Complex64::new(0.0, -1.0)],
            1e-12
        ));
    }

    #[test]
    fn conjugate_closure_random() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state as f64 / u64::MAX as f64) * 2.0 - 1.0
        };
        for n in 2..=8 {
            for _ in 0..20 {
                let a = RealMatrix::from_fn(n, |_, _| next());
                let s = eigenvalues(&a).unwrap();
                let conj: Vec<Complex64> = s.eigenvalues.iter().map(|z| z.conj()).collect();
                assert!(
                    s.matches_multiset(&conj, 1e-7 * (1.0 + a.norm_frobenius())),
                    "spectrum not conjugate closed for n={n}"
                );
                // First Newton identity: sum of eigenvalues equals the trace.
                let trace: f64 = (0..n).map(|i| a[(i, i)]).sum();
                let sum: Complex64 = s.eigenvalues.iter().sum();
                assert!((sum.re - trace).abs() < 1e-8 * (1.0 + trace.abs()));
                assert!(sum.im.abs() < 1e-8);
            }
        }
    }

    #[test]
    fn defective_jordan_block() {
        // Jordan block with eigenvalue 2 (defective): still converges.
        let a = RealMatrix::from_rows(&[
            vec![2.0, 1.0, 0.0],
            vec![0.0, 2.0, 1.0],
            vec![0.0, 0.0, 2.0],
        ])
        .unwrap();
        let s = eigenvalues(&a).unwrap();
        for z in &s.eigenvalues {
            assert!((z.re - 2.0).abs() < 1e-4 && z.im.abs() < 1e-4);
        }
    }

    #[test]
    fn stress_random_sizes_and_scales() {
        // Row-scaled random matrices mimic DA with wild diagonals; the
        // solver must converge and satisfy trace/determinant identities.
        let mut state = 0xdeadbeefu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state as f64 / u64::MAX as f64
        };
        for trial in 0..300 {
            let n = 2 + trial % 19; // 2..=20
            let raw = RealMatrix::from_fn(n, |_, _| 2.0 * next() - 1.0);
            let scales: Vec<f64> = (0..n).map(|_| 10f64.powf(6.0 * next() - 3.0)).collect();
            let a = raw.scale_rows(&scales);
            let s = eigenvalues(&a).expect("convergence");
            assert_eq!(s.eigenvalues.len(), n);
            let conj: Vec<Complex64> = s.eigenvalues.iter().map(|z| z.conj()).collect();
            assert!(s.matches_multiset(&conj, 1e-6 * (1.0 + a.norm_frobenius())));
            let trace: f64 = (0..n).map(|i| a[(i, i)]).sum();
            let sum: Complex64 = s.eigenvalues.iter().sum();
            assert!(
                (sum.re - trace).abs() <= 1e-7 * (1.0 + a.norm_frobenius()),
                "trace identity failed at n={n}: {} vs {trace}",
                sum.re
            );
            // |prod lambda| = |det|, compared on log scale to dodge
            // overflow at large n with big row scales.
            let det = a.det().abs();
            if det > 0.0 {
                let log_prod: f64 = s.eigenvalues.iter().map(|z| z.norm().ln()).sum();
                assert!(
                    (log_prod - det.ln()).abs() < 1e-4 * (1.0 + det.ln().abs()),
                    "determinant identity failed at n={n}"
                );
            }
        }
    }

    #[test]
    fn badly_scaled_matrix() {
        let a = RealMatrix::from_rows(&[
            vec![1e-3, 1e3, 0.0],
            vec![-1e3, 2e-3, 1.0],
            vec![0.0, 1e-6, -5.0],
        ])
        .unwrap();
        let s = eigenvalues(&a).unwrap();
        assert_eq!(s.eigenvalues.len(), 3);
        let trace: f64 = (0..3).map(|i| a[(i, i)]).sum();
        let sum: Complex64 = s.eigenvalues.iter().sum();
        assert!((sum.re - trace).abs() < 1e-6 * (1.0 + a.norm_frobenius()));
    }
}
