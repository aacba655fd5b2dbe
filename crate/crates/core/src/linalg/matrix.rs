use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::echelon::{rref_in_place, Echelon};
use super::LinalgError;
use crate::field::{RatFunc, Rational};

/// Dense matrix over ℚ(q), row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RatFunc>,
}

impl FieldMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FieldMatrix {
            rows,
            cols,
            entries: vec![RatFunc::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = RatFunc::one();
        }
        m
    }

    /// `c·I`.
    pub fn scalar(n: usize, c: &RatFunc) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = c.clone();
        }
        m
    }

    pub fn diagonal(diag: &[RatFunc]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(LinalgError::EmptyMatrix);
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Ragged);
        }
        Ok(FieldMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from columns.
    pub fn from_columns(cols: &[Vec<RatFunc>]) -> Result<Self, LinalgError> {
        Ok(Self::from_rows(cols.to_vec())?.transpose())
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> RatFunc) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        FieldMatrix { rows, cols, entries }
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

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFunc) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[RatFunc] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[RatFunc] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<RatFunc>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<RatFunc> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RatFunc::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        FieldMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn trace(&self) -> RatFunc {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn mul_vec(&self, v: &[RatFunc]) -> Vec<RatFunc> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Kronecker product; row index of `A ⊗ B` is `i·rows(B) + k`.
    pub fn kron(&self, other: &FieldMatrix) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        Self::from_fn(rows, cols, |r, c| {
            let a = self.get(r / other.rows, c / other.cols);
            if a.is_zero() {
                return RatFunc::zero();
            }
            a * other.get(r % other.rows, c % other.cols)
        })
    }

    /// `self − θ·I`.
    pub fn minus_scalar(&self, theta: &RatFunc) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = m.get(i, i) - theta;
            m.set(i, i, v);
        }
        m
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.row_vecs();
        rref_in_place(&mut rows, self.cols).len()
    }

    /// Exact inverse by Gauss–Jordan on `[A | I]`.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare);
        }
        let n = self.rows;
        let mut aug: Vec<Vec<RatFunc>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() }));
                row
            })
            .collect();
        let pivots = rref_in_place(&mut aug, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(LinalgError::Singular);
        }
        Ok(Self::from_fn(n, n, |i, j| aug[i][n + j].clone()))
    }

    /// A nonzero determinant at a sample point settles invertibility
    /// without exact elimination.
    pub fn is_invertible(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for q0 in super::sample_points() {
            if let Some(mut spec) = self.specialize(&q0) {
                if rref_in_place(&mut spec, self.cols).len() == self.rows {
                    return true;
                }
                break;
            }
        }
        self.rank() == self.rows
    }

    /// Entrywise substitution `q = q0`; `None` at a pole.
    pub fn specialize(&self, q0: &Rational) -> Option<Vec<Vec<Rational>>> {
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row: Option<Vec<Rational>> = self.row(i).iter().map(|x| x.eval_at(q0).ok()).collect();
            out.push(row?);
        }
        Some(out)
    }

    /// Flattened row-major entries, the vectorization used for span tests.
    pub fn vectorize(&self) -> Vec<RatFunc> {
        self.entries.clone()
    }

    /// Whether the columns are linearly independent.
    pub fn has_full_column_rank(&self) -> bool {
        let mut e = Echelon::new(self.rows);
        (0..self.cols).all(|j| e.insert(self.column(j)))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mul for &FieldMatrix {
    type Output = FieldMatrix;
    fn mul(self, rhs: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = FieldMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        out
    }
}

impl Add for &FieldMatrix {
    type Output = FieldMatrix;
    fn add(self, rhs: &FieldMatrix) -> FieldMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "dimension mismatch in sum"
        );
        FieldMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &FieldMatrix {
    type Output = FieldMatrix;
    fn sub(self, rhs: &FieldMatrix) -> FieldMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "dimension mismatch in difference"
        );
        FieldMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &FieldMatrix {
    type Output = FieldMatrix;
    fn neg(self) -> FieldMatrix {
        FieldMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

macro_rules! forward_mat {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldMatrix {
            type Output = FieldMatrix;
            fn $m(self, rhs: FieldMatrix) -> FieldMatrix {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldMatrix> for FieldMatrix {
            type Output = FieldMatrix;
            fn $m(self, rhs: &FieldMatrix) -> FieldMatrix {
                (&self).$m(rhs)
            }
        }
    };
}
forward_mat!(Add, add);
forward_mat!(Sub, sub);
forward_mat!(Mul, mul);

#[derive(Serialize, Deserialize)]
struct MatrixWire {
    cols: usize,
    entries: Vec<Vec<RatFunc>>,
    rows: usize,
}

impl Serialize for FieldMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixWire {
            cols: self.cols,
            entries: self.row_vecs(),
            rows: self.rows,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FieldMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let wire = MatrixWire::deserialize(deserializer)?;
        if wire.entries.len() != wire.rows {
            return Err(D::Error::custom(format!(
                "matrix declares {} rows but has {}",
                wire.rows,
                wire.entries.len()
            )));
        }
        if wire.entries.iter().any(|r| r.len() != wire.cols) {
            return Err(D::Error::custom(format!("matrix rows must have {} entries", wire.cols)));
        }
        FieldMatrix::from_rows(wire.entries).map_err(D::Error::custom)
    }
}
