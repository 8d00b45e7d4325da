use num_complex::Complex64;

use crate::linalg::matrix::RealMatrix;

/// Dense complex matrix determinant via LU with partial pivoting, together
/// with a scale-free margin (|det| over the Hadamard row-norm bound).
pub fn complex_det_margin(n: usize, data: &mut [Complex64]) -> (Complex64, f64) {
    debug_assert_eq!(data.len(), n * n);
    let mut bound = 1.0f64;
    for i in 0..n {
        let r: f64 = data[i * n..(i + 1) * n]
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt();
        if r == 0.0 {
            return (Complex64::new(0.0, 0.0), 0.0);
        }
        bound *= r;
    }
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let mut p = k;
        let mut best = data[k * n + k].norm_sqr();
        for i in (k + 1)..n {
            let v = data[i * n + k].norm_sqr();
            if v > best {
                best = v;
                p = i;
            }
        }
        if best == 0.0 {
            return (Complex64::new(0.0, 0.0), 0.0);
        }
        if p != k {
            for j in 0..n {
                data.swap(k * n + j, p * n + j);
            }
            det = -det;
        }
        let pivot = data[k * n + k];
        det *= pivot;
        for i in (k + 1)..n {
            let factor = data[i * n + k] / pivot;
            for j in (k + 1)..n {
                let sub = factor * data[k * n + j];
                data[i * n + j] -= sub;
            }
        }
    }
    let margin = (det.norm() / bound).min(1.0);
    (det, margin)
}

/// det(A - z * diag(d)) and its margin, for real A.
pub fn det_shifted_diag(a: &RealMatrix, d: &[f64], z: Complex64) -> (Complex64, f64) {
    let n = a.dim();
    let mut data: Vec<Complex64> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut entry = Complex64::new(a[(i, j)], 0.0);
            if i == j {
                entry -= z * d[i];
            }
            data.push(entry);
        }
    }
    complex_det_margin(n, &mut data)
}
