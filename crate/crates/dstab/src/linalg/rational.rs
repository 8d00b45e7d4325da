use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::matrix::{RealMatrix, MAX_DIM};

/// Exact rational scalar.
pub type Rat = BigRational;

pub fn rat_i64(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Parse a rational token: integer, `p/q`, or a decimal like `-0.25`.
pub fn parse_rat(token: &str) -> Result<Rat> {
    let t = token.trim();
    let err = |m: &str| Error::Parse {
        location: t.to_string(),
        message: m.to_string(),
    };
    if let Some((p, q)) = t.split_once('/') {
        let num = BigInt::from_str(p.trim()).map_err(|_| err("bad numerator"))?;
        let den = BigInt::from_str(q.trim()).map_err(|_| err("bad denominator"))?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        return Ok(Rat::new(num, den));
    }
    if let Some((int, frac)) = t.split_once('.') {
        let digits = frac.trim();
        if !digits.chars().all(|c| c.is_ascii_digit()) || digits.is_empty() {
            return Err(err("bad decimal token"));
        }
        let negative = int.trim_start().starts_with('-');
        let int_part = if int.is_empty() || int == "-" || int == "+" {
            BigInt::zero()
        } else {
            BigInt::from_str(int.trim()).map_err(|_| err("bad integer part"))?
        };
        let scale = BigInt::from(10u32).pow(digits.len() as u32);
        let frac_part = BigInt::from_str(digits).map_err(|_| err("bad fractional part"))?;
        let mag = int_part.abs() * &scale + frac_part;
        let signed = if negative { -mag } else { mag };
        return Ok(Rat::new(signed, scale));
    }
    let num = BigInt::from_str(t).map_err(|_| err("bad rational token"))?;
    Ok(Rat::from_integer(num))
}

/// Render as `p/q` (or plain integer when the denominator is 1).
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dense square matrix with exact rational entries.
#[derive(Clone, PartialEq)]
pub struct RationalMatrix {
    n: usize,
    data: Vec<Rat>,
}

impl RationalMatrix {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
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
            data.extend(row);
        }
        Ok(Self { n, data })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { Rat::one() } else { Rat::zero() })
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| Rat::zero())
    }

    pub fn diag(d: &[Rat]) -> Self {
        Self::from_fn(d.len(), |i, j| if i == j { d[i].clone() } else { Rat::zero() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Rat>> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.n, |i, j| -self.get(i, j).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn sub_scalar_identity(&self, shift: &Rat) -> Self {
        Self::from_fn(self.n, |i, j| {
            if i == j {
                self.get(i, j) - shift
            } else {
                self.get(i, j).clone()
            }
        })
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        Self::from_fn(n, |i, j| {
            let mut acc = Rat::zero();
            for k in 0..n {
                let a = self.get(i, k);
                if !a.is_zero() {
                    acc += a * other.get(k, j);
                }
            }
            acc
        })
    }

    pub fn scale_rows(&self, d: &[Rat]) -> Self {
        assert_eq!(d.len(), self.n);
        Self::from_fn(self.n, |i, j| &d[i] * self.get(i, j))
    }

    /// Exact determinant by Gaussian elimination over the rationals.
    pub fn det(&self) -> Rat {
        let n = self.n;
        let mut m = self.data.clone();
        let mut det = Rat::one();
        for k in 0..n {
            let pivot_row = match (k..n).find(|&i| !m[i * n + k].is_zero()) {
                Some(p) => p,
                None => return Rat::zero(),
            };
            if pivot_row != k {
                for j in 0..n {
                    m.swap(k * n + j, pivot_row * n + j);
                }
                det = -det;
            }
            let pivot = m[k * n + k].clone();
            det *= &pivot;
            for i in (k + 1)..n {
                if m[i * n + k].is_zero() {
                    continue;
                }
                let factor = &m[i * n + k] / &pivot;
                for j in (k + 1)..n {
                    let sub = &factor * &m[k * n + j];
                    m[i * n + j] -= sub;
                }
                m[i * n + k] = Rat::zero();
            }
        }
        det
    }

    /// Exact inverse via Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut m = self.data.clone();
        let mut inv = Self::identity(n).data;
        for k in 0..n {
            let pivot_row = (k..n)
                .find(|&i| !m[i * n + k].is_zero())
                .ok_or_else(|| Error::Singular("rational inverse".into()))?;
            if pivot_row != k {
                for j in 0..n {
                    m.swap(k * n + j, pivot_row * n + j);
                    inv.swap(k * n + j, pivot_row * n + j);
                }
            }
            let pivot = m[k * n + k].clone();
            for j in 0..n {
                m[k * n + j] /= &pivot;
                inv[k * n + j] /= &pivot;
            }
            for i in 0..n {
                if i == k || m[i * n + k].is_zero() {
                    continue;
                }
                let factor = m[i * n + k].clone();
                for j in 0..n {
                    let a = &factor * &m[k * n + j];
                    m[i * n + j] -= a;
                    let b = &factor * &inv[k * n + j];
                    inv[i * n + j] -= b;
                }
            }
        }
        Ok(Self { n, data: inv })
    }

    /// Principal minor on the given sorted index set.
    pub fn principal_minor(&self, idx: &[usize]) -> Rat {
        let k = idx.len();
        let sub = Self::from_fn(k, |i, j| self.get(idx[i], idx[j]).clone());
        sub.det()
    }

    /// Lossy conversion to floating point.
    pub fn to_real(&self) -> Result<RealMatrix> {
        let n = self.n;
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                row.push(self.get(i, j).to_f64().ok_or(Error::NonFinite)?);
            }
            rows.push(row);
        }
        RealMatrix::from_rows(&rows)
    }

    /// Exact ingestion of a floating matrix (every f64 is rational).
    pub fn from_real(m: &RealMatrix) -> Self {
        Self::from_fn(m.dim(), |i, j| Rat::from_float(m[(i, j)]).expect("finite entry"))
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.n, self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| format_rat(self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
