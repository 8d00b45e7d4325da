use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::rational::{format_rat, Rat};

/// Exponent vector of length n_diag + 1; the last slot is the distinguished
/// indeterminate X, the first n_diag slots are the diagonal variables
/// d_1..d_n. Ordered graded-lexicographically for deterministic iteration
/// and serialization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn constant(width: usize) -> Self {
        Monomial(vec![0; width])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients in the
/// diagonal variables d_1..d_n and one distinguished indeterminate X.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct MultiPoly {
    n_diag: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl MultiPoly {
    fn width(&self) -> usize {
        self.n_diag + 1
    }

    pub fn zero(n_diag: usize) -> Self {
        Self {
            n_diag,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_diag: usize, c: Rat) -> Self {
        let mut p = Self::zero(n_diag);
        if !c.is_zero() {
            p.terms.insert(Monomial::constant(n_diag + 1), c);
        }
        p
    }

    pub fn one(n_diag: usize) -> Self {
        Self::constant(n_diag, Rat::one())
    }

    /// The diagonal variable d_{i+1} (zero-based index i).
    pub fn var_d(n_diag: usize, i: usize) -> Self {
        assert!(i < n_diag, "diagonal variable index out of range");
        let mut exp = vec![0u16; n_diag + 1];
        exp[i] = 1;
        let mut p = Self::zero(n_diag);
        p.terms.insert(Monomial(exp), Rat::one());
        p
    }

    /// Build from explicit (exponent vector, coefficient) pairs; exponent
    /// vectors carry the X slot last.
    pub fn from_terms(n_diag: usize, terms: &[(Vec<u16>, Rat)]) -> Self {
        let mut p = Self::zero(n_diag);
        for (exp, coef) in terms {
            assert_eq!(exp.len(), n_diag + 1, "exponent arity");
            p.insert_term(Monomial(exp.clone()), coef.clone());
        }
        p
    }

    /// The distinguished indeterminate X.
    pub fn var_x(n_diag: usize) -> Self {
        let mut exp = vec![0u16; n_diag + 1];
        exp[n_diag] = 1;
        let mut p = Self::zero(n_diag);
        p.terms.insert(Monomial(exp), Rat::one());
        p
    }

    pub fn n_diag(&self) -> usize {
        self.n_diag
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &[u16]) -> Rat {
        self.terms
            .get(&Monomial(exp.to_vec()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coefficient(&vec![0u16; self.width()])
    }

    fn insert_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n_diag, other.n_diag);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            n_diag: self.n_diag,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero(self.n_diag);
        }
        Self {
            n_diag: self.n_diag,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * s))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n_diag, other.n_diag);
        let mut out = Self::zero(self.n_diag);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Exact evaluation; `point` must supply all n_diag + 1 variables
    /// (the X slot is last and ignored by X-free polynomials).
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.width(), "evaluation point arity");
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    term *= v;
                }
            }
            acc += term;
        }
        acc
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.width(), "evaluation point arity");
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut term = c.to_f64().unwrap_or(f64::NAN);
            for (v, &e) in point.iter().zip(&m.0) {
                term *= v.powi(e as i32);
            }
            acc += term;
        }
        acc
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn degree_of_var(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn x_degree(&self) -> u16 {
        self.degree_of_var(self.n_diag)
    }

    /// Coefficient of X^k as an X-free polynomial in the d variables.
    pub fn x_coefficient(&self, k: u16) -> MultiPoly {
        let mut out = Self::zero(self.n_diag);
        for (m, c) in &self.terms {
            if m.0[self.n_diag] == k {
                let mut exp = m.0.clone();
                exp[self.n_diag] = 0;
                out.insert_term(Monomial(exp), c.clone());
            }
        }
        out
    }

    /// All-coefficient sign census: (positives, negatives).
    pub fn sign_census(&self) -> (usize, usize) {
        let mut pos = 0;
        let mut neg = 0;
        for c in self.terms.values() {
            if c.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
        }
        (pos, neg)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", format_rat(c))?;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if i == self.n_diag {
                    "X".to_string()
                } else {
                    format!("d{}", i + 1)
                };
                if e == 1 {
                    write!(f, "*{name}")?;
                } else {
                    write!(f, "*{name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Determinant of a square matrix of polynomials by dynamic programming
/// over row subsets (Laplace expansion along columns, memoized). Exact and
/// division-free; exponential in the dimension, guarded by callers.
pub fn poly_det(entries: &[Vec<MultiPoly>]) -> MultiPoly {
    let m = entries.len();
    assert!(m > 0 && entries.iter().all(|r| r.len() == m));
    assert!(m <= 16, "poly_det dimension too large");
    let n_diag = entries[0][0].n_diag();
    // minors[mask] = det of the submatrix with rows in `mask` and the
    // first popcount(mask) columns.
    let mut minors: Vec<Option<MultiPoly>> = vec![None; 1 << m];
    minors[0] = Some(MultiPoly::one(n_diag));
    let full = (1usize << m) - 1;
    let mut masks: Vec<usize> = (1..=full).collect();
    masks.sort_by_key(|x| x.count_ones());
    for mask in masks {
        let k = mask.count_ones() as usize;
        let col = k - 1;
        let mut acc = MultiPoly::zero(n_diag);
        let mut position = 0usize;
        for row in 0..m {
            if mask >> row & 1 == 0 {
                continue;
            }
            let entry = &entries[row][col];
            if !entry.is_zero() {
                let sub = minors[mask & !(1 << row)]
                    .as_ref()
                    .expect("subset minors computed in popcount order");
                let contribution = entry.mul(sub);
                if (position + col).is_multiple_of(2) {
                    acc = acc.add(&contribution);
                } else {
                    acc = acc.sub(&contribution);
                }
            }
            position += 1;
        }
        minors[mask] = Some(acc);
    }
    minors[full].take().expect("full minor")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{rat_i64, rat_int};

    #[test]
    fn arithmetic_basics() {
        let d1 = MultiPoly::var_d(2, 0);
        let d2 = MultiPoly::var_d(2, 1);
        let x = MultiPoly::var_x(2);
        // (d1 + X)(d2 - X) = d1 d2 - d1 X + d2 X - X^2
        let p = d1.add(&x).mul(&d2.sub(&x));
        assert_eq!(p.num_terms(), 4);
        assert_eq!(p.coefficient(&[1, 1, 0]), rat_int(1));
        assert_eq!(p.coefficient(&[1, 0, 1]), rat_int(-1));
        assert_eq!(p.coefficient(&[0, 1, 1]), rat_int(1));
        assert_eq!(p.coefficient(&[0, 0, 2]), rat_int(-1));
        // cancellation removes stored zeros
        let q = p.sub(&p);
        assert!(q.is_zero());
    }

    #[test]
    fn evaluation() {
        let d1 = MultiPoly::var_d(1, 0);
        let p = d1.mul(&d1).add(&MultiPoly::constant(1, rat_int(3)));
        assert_eq!(p.eval(&[rat_i64(1, 2), rat_int(0)]), rat_i64(13, 4));
        assert!((p.eval_f64(&[0.5, 0.0]) - 3.25).abs() < 1e-15);
    }

    #[test]
    fn det_matches_scalar_case() {
        // [[d1, 2], [3, d2]] -> d1 d2 - 6
        let n = 2;
        let entries = vec![
            vec![MultiPoly::var_d(n, 0), MultiPoly::constant(n, rat_int(2))],
            vec![MultiPoly::constant(n, rat_int(3)), MultiPoly::var_d(n, 1)],
        ];
        let det = poly_det(&entries);
        assert_eq!(det.coefficient(&[1, 1, 0]), rat_int(1));
        assert_eq!(det.constant_term(), rat_int(-6));
        assert_eq!(det.num_terms(), 2);
    }

    #[test]
    fn det_agrees_with_numeric() {
        // Random constant matrix: poly_det equals rational Gaussian det.
        use crate::linalg::rational::RationalMatrix;
        let mut seed = 31u64;
        let mut next = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            rat_i64((seed % 13) as i64 - 6, 1 + (seed % 3) as i64)
        };
        for m in 2..=5 {
            let a = RationalMatrix::from_fn(m, |_, _| next());
            let entries: Vec<Vec<MultiPoly>> = (0..m)
                .map(|i| {
                    (0..m)
                        .map(|j| MultiPoly::constant(0, a.get(i, j).clone()))
                        .collect()
                })
                .collect();
            assert_eq!(poly_det(&entries).constant_term(), a.det());
        }
    }

    #[test]
    fn graded_lex_ordering_is_deterministic() {
        let n = 2;
        let p = MultiPoly::var_d(n, 0)
            .add(&MultiPoly::var_d(n, 1))
            .add(&MultiPoly::var_x(n))
            .add(&MultiPoly::var_d(n, 0).mul(&MultiPoly::var_d(n, 1)));
        let exps: Vec<Vec<u16>> = p.terms().map(|(m, _)| m.0.clone()).collect();
        assert_eq!(
            exps,
            vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0], vec![1, 1, 0]]
        );
    }
}
