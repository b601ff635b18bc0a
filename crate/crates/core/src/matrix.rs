//! Dense square matrices over exact rationals.
//!
//! Everything certified in this crate flows through these routines:
//! determinants use fraction-free Bareiss elimination over big integers
//! (denominators are cleared per row first), inverses use exact
//! Gauss-Jordan. Floating point never enters here.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Square matrix with `BigRational` entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    dim: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![BigRational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Self { dim, entries }
    }

    /// Convenience constructor for integer test fixtures.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "rows must be square");
        Self::from_fn(dim, |i, j| BigRational::from_integer(BigInt::from(rows[i][j])))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        assert!(i < self.dim && j < self.dim, "index out of bounds");
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        assert!(i < self.dim && j < self.dim, "index out of bounds");
        self.entries[i * self.dim + j] = value;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        Self::from_fn(self.dim, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        Self::from_fn(self.dim, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(i, j) * factor)
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        Self::from_fn(n, |i, j| {
            let mut acc = BigRational::zero();
            for k in 0..n {
                acc += self.get(i, k) * other.get(k, j);
            }
            acc
        })
    }

    pub fn trace(&self) -> BigRational {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sum(&self, i: usize) -> BigRational {
        (0..self.dim).map(|j| self.get(i, j)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_integer(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    /// Leading k×k principal submatrix.
    pub fn leading_principal_submatrix(&self, k: usize) -> Self {
        assert!(k <= self.dim);
        Self::from_fn(k, |i, j| self.get(i, j).clone())
    }

    /// Copy with row and column `i` removed.
    pub fn delete_row_col(&self, i: usize) -> Self {
        assert!(i < self.dim);
        let keep: Vec<usize> = (0..self.dim).filter(|&k| k != i).collect();
        Self::from_fn(self.dim - 1, |r, c| self.get(keep[r], keep[c]).clone())
    }

    /// Exact determinant.
    ///
    /// Denominators are cleared row by row, then the integer matrix goes
    /// through Bareiss elimination; intermediate divisions are exact so the
    /// integers stay the size of minors instead of blowing up.
    pub fn determinant(&self) -> BigRational {
        if self.dim == 0 {
            return BigRational::one();
        }
        let mut scale = BigInt::one();
        let mut m: Vec<BigInt> = Vec::with_capacity(self.dim * self.dim);
        for i in 0..self.dim {
            let mut lcm = BigInt::one();
            for j in 0..self.dim {
                lcm = num::integer::lcm(lcm, self.get(i, j).denom().clone());
            }
            for j in 0..self.dim {
                let e = self.get(i, j);
                m.push(e.numer() * (&lcm / e.denom()));
            }
            scale *= lcm;
        }
        let det = bareiss_determinant(self.dim, m);
        BigRational::new(det, scale)
    }

    /// Exact inverse via Gauss-Jordan; `Err(SingularMatrix)` if rank-deficient.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(n).entries;
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !a[r * n + col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                    inv.swap(col * n + j, pivot_row * n + j);
                }
            }
            let pivot = a[col * n + col].clone();
            for j in 0..n {
                a[col * n + j] = &a[col * n + j] / &pivot;
                inv[col * n + j] = &inv[col * n + j] / &pivot;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].clone();
                for j in 0..n {
                    let av = &a[col * n + j] * &factor;
                    a[r * n + j] = &a[r * n + j] - av;
                    let iv = &inv[col * n + j] * &factor;
                    inv[r * n + j] = &inv[r * n + j] - iv;
                }
            }
        }
        Ok(Self { dim: n, entries: inv })
    }

    /// JSON export: array of rows, each entry a `[numerator, denominator]`
    /// pair of 64-bit integers. Errors if an entry does not fit.
    pub fn to_json(&self) -> Result<serde_json::Value> {
        use num::ToPrimitive;
        let mut rows = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let mut row = Vec::with_capacity(self.dim);
            for j in 0..self.dim {
                let e = self.get(i, j);
                let n = e.numer().to_i64().ok_or(Error::EntryTooLarge)?;
                let d = e.denom().to_i64().ok_or(Error::EntryTooLarge)?;
                row.push(serde_json::json!([n, d]));
            }
            rows.push(serde_json::Value::Array(row));
        }
        Ok(serde_json::Value::Array(rows))
    }
}

/// Fraction-free Bareiss determinant of an integer matrix (row-major).
fn bareiss_determinant(dim: usize, mut m: Vec<BigInt>) -> BigInt {
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..dim.saturating_sub(1) {
        if m[k * dim + k].is_zero() {
            match (k + 1..dim).find(|&r| !m[r * dim + k].is_zero()) {
                Some(r) => {
                    for j in 0..dim {
                        m.swap(k * dim + j, r * dim + j);
                    }
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..dim {
            for j in k + 1..dim {
                let num = &m[i * dim + j] * &m[k * dim + k] - &m[i * dim + k] * &m[k * dim + j];
                // exact by the Bareiss identity
                m[i * dim + j] = num / &prev;
            }
            m[i * dim + k] = BigInt::zero();
        }
        prev = m[k * dim + k].clone();
    }
    let det = m[(dim - 1) * dim + (dim - 1)].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Round-half-away-from-zero rendering of an exact rational with a fixed
/// number of decimal places.
pub fn decimal_string(value: &BigRational, places: u32) -> String {
    let mut scale = BigInt::one();
    for _ in 0..places {
        scale *= 10;
    }
    let negative = value.is_negative();
    let abs = value.abs();
    let scaled = abs * BigRational::from_integer(scale.clone());
    let rounded = (scaled + BigRational::new(BigInt::one(), BigInt::from(2)))
        .floor()
        .to_integer();
    let int_part = &rounded / &scale;
    let frac_part = &rounded % &scale;
    let mut out = String::new();
    if negative && !rounded.is_zero() {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if places > 0 {
        out.push('.');
        let frac = frac_part.to_string();
        for _ in frac.len()..places as usize {
            out.push('0');
        }
        out.push_str(&frac);
    }
    out
}
