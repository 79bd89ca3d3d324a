//! Dense exact matrices.
//!
//! Products skip zero entries of the left factor, which keeps the structure-constant
//! matrices (mostly permutation-like) cheap to multiply even at a few hundred rows.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{format_scalar, Scalar};
use super::LinalgError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
  rows: usize,
  cols: usize,
  data: Vec<Scalar>,
}

impl Matrix {
  pub fn zeros(rows: usize, cols: usize) -> Self {
    Self { rows, cols, data: vec![Scalar::zero(); rows * cols] }
  }

  pub fn identity(n: usize) -> Self {
    let mut m = Self::zeros(n, n);
    for i in 0..n {
      m.data[i * n + i] = Scalar::one();
    }
    m
  }

  pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
    let mut data = Vec::with_capacity(rows * cols);
    for r in 0..rows {
      for c in 0..cols {
        data.push(f(r, c));
      }
    }
    Self { rows, cols, data }
  }

  /// Builds a matrix from row vectors. All rows must have equal length.
  pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
    let ncols = rows.first().map_or(0, Vec::len);
    if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
      return Err(LinalgError::Ragged { expected: ncols, found: bad.len() });
    }
    let nrows = rows.len();
    Ok(Self { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() })
  }

  /// Builds a matrix whose columns are the given vectors.
  pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Result<Self, LinalgError> {
    if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
      return Err(LinalgError::Ragged { expected: rows, found: bad.len() });
    }
    Ok(Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone()))
  }

  pub fn column_vector(v: Vec<Scalar>) -> Self {
    Self { rows: v.len(), cols: 1, data: v }
  }

  pub fn row_vector(v: Vec<Scalar>) -> Self {
    Self { rows: 1, cols: v.len(), data: v }
  }

  pub fn rows(&self) -> usize {
    self.rows
  }

  pub fn cols(&self) -> usize {
    self.cols
  }

  pub fn shape(&self) -> (usize, usize) {
    (self.rows, self.cols)
  }

  pub fn get(&self, r: usize, c: usize) -> &Scalar {
    &self.data[r * self.cols + c]
  }

  pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
    self.data[r * self.cols + c] = value;
  }

  pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
    &mut self.data[r * self.cols + c]
  }

  pub fn row(&self, r: usize) -> &[Scalar] {
    &self.data[r * self.cols..(r + 1) * self.cols]
  }

  pub fn column(&self, c: usize) -> Vec<Scalar> {
    (0..self.rows).map(|r| self.get(r, c).clone()).collect()
  }

  /// Row-major flattening; `vec(F)[r * cols + c] = F[r][c]`.
  pub fn as_slice(&self) -> &[Scalar] {
    &self.data
  }

  pub fn into_vec(self) -> Vec<Scalar> {
    self.data
  }

  /// Inverse of [`Matrix::as_slice`].
  pub fn from_vec(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self, LinalgError> {
    if data.len() != rows * cols {
      return Err(LinalgError::Ragged { expected: rows * cols, found: data.len() });
    }
    Ok(Self { rows, cols, data })
  }

  pub fn is_zero(&self) -> bool {
    self.data.iter().all(Zero::is_zero)
  }

  pub fn nonzero_count(&self) -> usize {
    self.data.iter().filter(|x| !x.is_zero()).count()
  }

  pub fn transpose(&self) -> Self {
    Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
  }

  pub fn scale(&self, k: &Scalar) -> Self {
    if k.is_zero() {
      return Self::zeros(self.rows, self.cols);
    }
    Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * k).collect() }
  }

  pub fn checked_mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
    if self.cols != rhs.rows {
      return Err(LinalgError::Shape { left: self.shape(), right: rhs.shape(), op: "compose" });
    }
    let mut out = Self::zeros(self.rows, rhs.cols);
    for r in 0..self.rows {
      for k in 0..self.cols {
        let a = self.get(r, k);
        if a.is_zero() {
          continue;
        }
        let rhs_row = rhs.row(k);
        let out_row = &mut out.data[r * rhs.cols..(r + 1) * rhs.cols];
        for (o, b) in out_row.iter_mut().zip(rhs_row) {
          if !b.is_zero() {
            *o += a * b;
          }
        }
      }
    }
    Ok(out)
  }

  pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
    if self.cols != v.len() {
      return Err(LinalgError::Shape { left: self.shape(), right: (v.len(), 1), op: "apply" });
    }
    Ok(
      (0..self.rows)
        .map(|r| {
          self
            .row(r)
            .iter()
            .zip(v)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect(),
    )
  }

  /// Kronecker product with the left factor most significant:
  /// `(A ⊗ B)[(i·p + k), (j·q + l)] = A[i][j]·B[k][l]` for `B` of shape `p × q`.
  pub fn kron(&self, rhs: &Self) -> Self {
    let (p, q) = rhs.shape();
    let mut out = Self::zeros(self.rows * p, self.cols * q);
    for i in 0..self.rows {
      for j in 0..self.cols {
        let a = self.get(i, j);
        if a.is_zero() {
          continue;
        }
        for k in 0..p {
          for l in 0..q {
            let b = rhs.get(k, l);
            if !b.is_zero() {
              out.set(i * p + k, j * q + l, a * b);
            }
          }
        }
      }
    }
    out
  }

  pub fn checked_add(&self, rhs: &Self) -> Result<Self, LinalgError> {
    if self.shape() != rhs.shape() {
      return Err(LinalgError::Shape { left: self.shape(), right: rhs.shape(), op: "add" });
    }
    Ok(Self {
      rows: self.rows,
      cols: self.cols,
      data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
    })
  }

  /// Stacks `self` on top of `rhs`.
  pub fn vstack(&self, rhs: &Self) -> Result<Self, LinalgError> {
    if self.cols != rhs.cols {
      return Err(LinalgError::Shape { left: self.shape(), right: rhs.shape(), op: "vstack" });
    }
    let mut data = self.data.clone();
    data.extend(rhs.data.iter().cloned());
    Ok(Self { rows: self.rows + rhs.rows, cols: self.cols, data })
  }

  /// Places `rhs` to the right of `self`.
  pub fn hstack(&self, rhs: &Self) -> Result<Self, LinalgError> {
    if self.rows != rhs.rows {
      return Err(LinalgError::Shape { left: self.shape(), right: rhs.shape(), op: "hstack" });
    }
    Ok(Self::from_fn(self.rows, self.cols + rhs.cols, |r, c| {
      if c < self.cols {
        self.get(r, c).clone()
      } else {
        rhs.get(r, c - self.cols).clone()
      }
    }))
  }

  /// First position (row-major) where the two matrices differ.
  pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
    if self.shape() != other.shape() {
      return Some((0, 0));
    }
    // Scan column-major so the reported witness is the first failing input basis element.
    (0..self.cols)
      .flat_map(|c| (0..self.rows).map(move |r| (r, c)))
      .find(|&(r, c)| self.get(r, c) != other.get(r, c))
  }
}

impl fmt::Debug for Matrix {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
    for r in 0..self.rows {
      let row: Vec<String> = self.row(r).iter().map(format_scalar).collect();
      writeln!(f, "  [{}]", row.join(", "))?;
    }
    write!(f, "]")
  }
}

impl Mul for &Matrix {
  type Output = Matrix;

  /// Panics on mismatched inner dimensions; use [`Matrix::checked_mul`] for fallible composition.
  fn mul(self, rhs: &Matrix) -> Matrix {
    match self.checked_mul(rhs) {
      Ok(m) => m,
      Err(e) => panic!("{e}"),
    }
  }
}

impl Add for &Matrix {
  type Output = Matrix;

  fn add(self, rhs: &Matrix) -> Matrix {
    match self.checked_add(rhs) {
      Ok(m) => m,
      Err(e) => panic!("{e}"),
    }
  }
}

impl AddAssign<&Matrix> for Matrix {
  fn add_assign(&mut self, rhs: &Matrix) {
    assert_eq!(self.shape(), rhs.shape(), "add_assign shape mismatch");
    for (a, b) in self.data.iter_mut().zip(&rhs.data) {
      if !b.is_zero() {
        *a += b;
      }
    }
  }
}

impl Sub for &Matrix {
  type Output = Matrix;

  fn sub(self, rhs: &Matrix) -> Matrix {
    self + &(-rhs)
  }
}

impl Neg for &Matrix {
  type Output = Matrix;

  fn neg(self) -> Matrix {
    Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
  }
}
