use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};

/// Hard ceiling on matrix dimension. The library targets desk-scale
/// analysis; the Lyapunov solver alone is O(n^6).
pub const MAX_DIM: usize = 64;

/// Dense square matrix of `f64` entries, row-major.
#[derive(Clone, PartialEq)]
pub struct RealMatrix {
    n: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    /// Build from row data. Rejects ragged, non-square or non-finite input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NonSquare { rows: 0, cols: 0 });
        }
        if n > MAX_DIM {
            return Err(Error::DimensionGuard { n, guard: MAX_DIM });
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::NonSquare {
                    rows: n,
                    cols: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { n, data })
    }

    /// Build from a flat row-major slice of length n*n.
    pub fn from_flat(n: usize, data: &[f64]) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                got: data.len(),
            });
        }
        if n == 0 || n > MAX_DIM {
            return Err(Error::DimensionGuard { n, guard: MAX_DIM });
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self {
            n,
            data: data.to_vec(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn diag(d: &[f64]) -> Self {
        let n = d.len();
        Self::from_fn(n, |i, j| if i == j { d[i] } else { 0.0 })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch in add");
        Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch in sub");
        Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1.0)
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch in matmul");
        let n = self.n;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = self.data[i * n + k];
                if aik == 0.0 {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                let orow = &mut out[i * n..(i + 1) * n];
                for j in 0..n {
                    orow[j] += aik * brow[j];
                }
            }
        }
        Self { n, data: out }
    }

    /// D * A for diagonal D given as entry slice (scales row i by d[i]).
    pub fn scale_rows(&self, d: &[f64]) -> Self {
        assert_eq!(d.len(), self.n, "diagonal length mismatch");
        Self::from_fn(self.n, |i, j| d[i] * self[(i, j)])
    }

    /// A * D for diagonal D (scales column j by d[j]).
    pub fn scale_cols(&self, d: &[f64]) -> Self {
        assert_eq!(d.len(), self.n, "diagonal length mismatch");
        Self::from_fn(self.n, |i, j| self[(i, j)] * d[j])
    }

    /// A - shift*I.
    pub fn sub_scalar_identity(&self, shift: f64) -> Self {
        Self::from_fn(self.n, |i, j| {
            if i == j {
                self[(i, j)] - shift
            } else {
                self[(i, j)]
            }
        })
    }

    /// Kronecker product; `self` is p x p, `other` q x q, result pq x pq.
    pub fn kron(&self, other: &Self) -> Self {
        let p = self.n;
        let q = other.n;
        Self::from_fn(p * q, |i, j| {
            let (bi, ii) = (i / q, i % q);
            let (bj, jj) = (j / q, j % q);
            self[(bi, bj)] * other[(ii, jj)]
        })
    }

    /// Assemble a 2x2 block matrix; all blocks must share one dimension.
    pub fn from_blocks(b11: &Self, b12: &Self, b21: &Self, b22: &Self) -> Self {
        let n = b11.n;
        assert!(
            b12.n == n && b21.n == n && b22.n == n,
            "block dimension mismatch"
        );
        Self::from_fn(2 * n, |i, j| match (i < n, j < n) {
            (true, true) => b11[(i, j)],
            (true, false) => b12[(i, j - n)],
            (false, true) => b21[(i - n, j)],
            (false, false) => b22[(i - n, j - n)],
        })
    }

    /// Max absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum())
            .fold(0.0, f64::max)
    }

    pub fn norm_frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn is_symmetric(&self, band: f64) -> bool {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if (self[(i, j)] - self[(j, i)]).abs() > band {
                    return false;
                }
            }
        }
        true
    }

    pub fn symmetrize(&self) -> Self {
        Self::from_fn(self.n, |i, j| 0.5 * (self[(i, j)] + self[(j, i)]))
    }

    /// LU factorization with partial pivoting. Returns (packed LU, perm,
    /// sign) or None when a pivot column is exactly zero.
    fn lu(&self) -> Option<(Vec<f64>, Vec<usize>, f64)> {
        let n = self.n;
        let mut lu = self.data.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        for k in 0..n {
            let mut p = k;
            let mut best = lu[k * n + k].abs();
            for i in (k + 1)..n {
                let v = lu[i * n + k].abs();
                if v > best {
                    best = v;
                    p = i;
                }
            }
            if best == 0.0 {
                return None;
            }
            if p != k {
                for j in 0..n {
                    lu.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
                sign = -sign;
            }
            let pivot = lu[k * n + k];
            for i in (k + 1)..n {
                let factor = lu[i * n + k] / pivot;
                lu[i * n + k] = factor;
                for j in (k + 1)..n {
                    lu[i * n + j] -= factor * lu[k * n + j];
                }
            }
        }
        Some((lu, perm, sign))
    }

    /// Determinant via LU; exact zero when a pivot vanishes.
    pub fn det(&self) -> f64 {
        match self.lu() {
            None => 0.0,
            Some((lu, _, sign)) => {
                let n = self.n;
                (0..n).fold(sign, |acc, k| acc * lu[k * n + k])
            }
        }
    }

    /// Scale-free singularity margin: |det| divided by the Hadamard bound
    /// (product of row 2-norms). Always in [0, 1]; 0 means singular.
    pub fn det_margin(&self) -> f64 {
        let n = self.n;
        let mut bound = 1.0f64;
        for i in 0..n {
            let r = self.row(i).iter().map(|x| x * x).sum::<f64>().sqrt();
            if r == 0.0 {
                return 0.0;
            }
            bound *= r;
        }
        (self.det().abs() / bound).min(1.0)
    }

    /// Margin of |det| against the Hadamard bound of a caller-supplied
    /// magnitude matrix; used when the matrix itself was formed by
    /// cancellation-prone sums and its own row norms understate the
    /// accumulated scale.
    pub fn det_margin_vs(&self, magnitude: &RealMatrix) -> f64 {
        let n = self.n;
        let mut bound = 1.0f64;
        for i in 0..n {
            let r = magnitude.row(i).iter().map(|x| x * x).sum::<f64>().sqrt();
            if r == 0.0 {
                return 0.0;
            }
            bound *= r;
        }
        (self.det().abs() / bound).min(1.0)
    }

    /// Entrywise absolute value.
    pub fn abs(&self) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|x| x.abs()).collect(),
        }
    }

    /// Solve A x = b.
    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        let n = self.n;
        if b.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: b.len(),
            });
        }
        let (lu, perm, _) = self
            .lu()
            .ok_or_else(|| Error::Singular("linear solve".into()))?;
        let mut x: Vec<f64> = perm.iter().map(|&p| b[p]).collect();
        for i in 1..n {
            for j in 0..i {
                x[i] -= lu[i * n + j] * x[j];
            }
        }
        for i in (0..n).rev() {
            for j in (i + 1)..n {
                x[i] -= lu[i * n + j] * x[j];
            }
            x[i] /= lu[i * n + i];
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![0.0; n];
            e[j] = 1.0;
            cols.push(self.solve(&e)?);
        }
        Ok(Self::from_fn(n, |i, j| cols[j][i]))
    }
}

impl Index<(usize, usize)> for RealMatrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for RealMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

impl fmt::Debug for RealMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RealMatrix {}x{} [", self.n, self.n)?;
        for i in 0..self.n {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}
