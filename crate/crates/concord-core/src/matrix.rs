//! Dense integer matrices with arbitrary-precision entries.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::Result;

/// Dense matrix over the integers. Row and column counts may be zero; the
/// empty 0x0 matrix is the Seifert matrix of the unknot and its determinant
/// is the empty product 1.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IntMatrix({}x{}) {}", self.rows, self.cols, self)
    }
}

impl std::fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows of `i64` entries. Errors on ragged rows.
    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::invalid("ragged rows in matrix"));
        }
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(*x));
            }
        }
        Ok(m)
    }

    pub fn from_fn<T: Into<BigInt>>(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j).into());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }

    pub fn scale_int(&self, k: i64) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * k)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    /// Block-diagonal concatenation, used for connected sums of Seifert
    /// matrices and split surgery diagrams.
    pub fn block_diag(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    /// row[i] += c * row[j]
    pub fn addmul_row(&mut self, i: usize, j: usize, c: &BigInt) {
        assert_ne!(i, j);
        for k in 0..self.cols {
            let v = self.get(i, k) + c * self.get(j, k);
            self.set(i, k, v);
        }
    }

    /// col[i] += c * col[j]
    pub fn addmul_col(&mut self, i: usize, j: usize, c: &BigInt) {
        assert_ne!(i, j);
        for k in 0..self.rows {
            let v = self.get(k, i) + c * self.get(k, j);
            self.set(k, i, v);
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::invalid("determinant of a non-square matrix"));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    // Bareiss: division by the previous pivot is exact.
                    a[i][j] = num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if sign < 0 { -det } else { det })
    }

    /// Exact inverse over the rationals; `None` when singular.
    pub fn inverse_rational(&self) -> Option<Vec<Vec<BigRational>>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigRational::from(self.get(i, j).clone()))
                    .collect()
            })
            .collect();
        let mut inv: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for k in 0..n {
            let p = (k..n).find(|&i| !a[i][k].is_zero())?;
            a.swap(k, p);
            inv.swap(k, p);
            let piv = a[k][k].clone();
            for j in 0..n {
                a[k][j] /= piv.clone();
                inv[k][j] /= piv.clone();
            }
            for i in 0..n {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let f = a[i][k].clone();
                for j in 0..n {
                    let av = &a[k][j] * &f;
                    a[i][j] -= av;
                    let iv = &inv[k][j] * &f;
                    inv[i][j] -= iv;
                }
            }
        }
        Some(inv)
    }

    /// The absolute value of the determinant of a unimodular matrix is 1.
    pub fn is_unimodular(&self) -> bool {
        self.determinant().map(|d| d.abs().is_one()).unwrap_or(false)
    }
}

// Serialized as rows of decimal strings so entries of any size round-trip
// exactly through JSON.
impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(deserializer)?;
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(D::Error::custom("ragged rows in matrix"));
        }
        let mut m = IntMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                let v: BigInt = s
                    .parse()
                    .map_err(|_| D::Error::custom(format!("bad integer entry {s:?}")))?;
                m.set(i, j, v);
            }
        }
        Ok(m)
    }
}

/// Serde adapter for a single `BigInt` as a decimal string.
pub mod bigint_string {
    use super::*;

    pub fn serialize<S: Serializer>(
        v: &BigInt,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        v.to_string().serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<BigInt, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse()
            .map_err(|_| D::Error::custom(format!("bad integer {s:?}")))
    }
}

/// Serde adapter for a `BigRational` as a "p/q" string.
pub mod bigrational_string {
    use super::*;

    pub fn serialize<S: Serializer>(
        v: &BigRational,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        format!("{}/{}", v.numer(), v.denom()).serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<BigRational, D::Error> {
        let s = String::deserialize(deserializer)?;
        let (num, den) = s
            .split_once('/')
            .ok_or_else(|| D::Error::custom(format!("expected p/q, got {s:?}")))?;
        let num: BigInt = num
            .parse()
            .map_err(|_| D::Error::custom(format!("bad numerator {num:?}")))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| D::Error::custom(format!("bad denominator {den:?}")))?;
        if den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(BigRational::new(num, den))
    }
}

/// Serde adapter for `Vec<BigInt>` as decimal strings, matching the matrix
/// encoding. Use via `#[serde(with = "crate::matrix::bigint_vec")]`.
pub mod bigint_vec {
    use super::*;

    pub fn serialize<S: Serializer>(
        v: &[BigInt],
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        strings.serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Vec<BigInt>, D::Error> {
        let strings: Vec<String> = Vec::deserialize(deserializer)?;
        strings
            .iter()
            .map(|s| {
                s.parse()
                    .map_err(|_| D::Error::custom(format!("bad integer entry {s:?}")))
            })
            .collect()
    }
}
