//! Linear maps `B^⊗q → B^⊗p` stored as `d^p × d^q` matrices.
//!
//! Tensor powers are ordered lexicographically with the leftmost slot most significant, so
//! `e_{i1}⊗…⊗e_{in}` sits at index `((i1·d + i2)·d + …)·d + in`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::{LinalgError, Matrix, Scalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinMap {
  base_dim: usize,
  cod_arity: usize,
  dom_arity: usize,
  matrix: Matrix,
}

impl LinMap {
  /// Wraps a matrix, checking that it has shape `d^p × d^q`.
  pub fn new(
    base_dim: usize,
    cod_arity: usize,
    dom_arity: usize,
    matrix: Matrix,
  ) -> Result<Self, LinalgError> {
    let expected = (base_dim.pow(cod_arity as u32), base_dim.pow(dom_arity as u32));
    if matrix.shape() != expected {
      return Err(LinalgError::Shape { left: expected, right: matrix.shape(), op: "wrap" });
    }
    Ok(Self { base_dim, cod_arity, dom_arity, matrix })
  }

  pub fn identity(base_dim: usize, arity: usize) -> Self {
    let n = base_dim.pow(arity as u32);
    Self { base_dim, cod_arity: arity, dom_arity: arity, matrix: Matrix::identity(n) }
  }

  pub fn zero(base_dim: usize, cod_arity: usize, dom_arity: usize) -> Self {
    let m = Matrix::zeros(base_dim.pow(cod_arity as u32), base_dim.pow(dom_arity as u32));
    Self { base_dim, cod_arity, dom_arity, matrix: m }
  }

  pub fn base_dim(&self) -> usize {
    self.base_dim
  }

  pub fn cod_arity(&self) -> usize {
    self.cod_arity
  }

  pub fn dom_arity(&self) -> usize {
    self.dom_arity
  }

  pub fn matrix(&self) -> &Matrix {
    &self.matrix
  }

  pub fn into_matrix(self) -> Matrix {
    self.matrix
  }

  pub fn is_zero(&self) -> bool {
    self.matrix.is_zero()
  }

  /// `self ∘ f`.
  pub fn compose(&self, f: &LinMap) -> Result<LinMap, LinalgError> {
    if self.base_dim != f.base_dim {
      return Err(LinalgError::BaseDim(self.base_dim, f.base_dim));
    }
    let matrix = self.matrix.checked_mul(&f.matrix)?;
    Ok(Self { base_dim: self.base_dim, cod_arity: self.cod_arity, dom_arity: f.dom_arity, matrix })
  }

  /// `self ⊗ g`, acting as `(self⊗g)(x⊗y) = self(x)⊗g(y)`.
  pub fn tensor(&self, g: &LinMap) -> Result<LinMap, LinalgError> {
    if self.base_dim != g.base_dim {
      return Err(LinalgError::BaseDim(self.base_dim, g.base_dim));
    }
    Ok(Self {
      base_dim: self.base_dim,
      cod_arity: self.cod_arity + g.cod_arity,
      dom_arity: self.dom_arity + g.dom_arity,
      matrix: self.matrix.kron(&g.matrix),
    })
  }

  /// Tensor product of a list of maps, left to right.
  pub fn tensor_all(maps: &[&LinMap]) -> Result<LinMap, LinalgError> {
    let Some((first, rest)) = maps.split_first() else {
      return Err(LinalgError::Ragged { expected: 1, found: 0 });
    };
    rest.iter().try_fold((*first).clone(), |acc, m| acc.tensor(m))
  }

  /// `self^{⊗n}`; `n = 0` gives the identity on the ground field.
  pub fn tensor_power(&self, n: usize) -> LinMap {
    let mut out = Self { base_dim: self.base_dim, cod_arity: 0, dom_arity: 0, matrix: Matrix::identity(1) };
    for _ in 0..n {
      out = Self {
        base_dim: self.base_dim,
        cod_arity: out.cod_arity + self.cod_arity,
        dom_arity: out.dom_arity + self.dom_arity,
        matrix: out.matrix.kron(&self.matrix),
      };
    }
    out
  }

  /// Composition power of an endomorphism; `k = 0` gives the identity.
  pub fn power(&self, k: usize) -> Result<LinMap, LinalgError> {
    if self.cod_arity != self.dom_arity {
      return Err(LinalgError::Shape { left: self.matrix.shape(), right: self.matrix.shape(), op: "power" });
    }
    let mut out = LinMap::identity(self.base_dim, self.dom_arity);
    for _ in 0..k {
      out = self.compose(&out)?;
    }
    Ok(out)
  }

  pub fn transpose(&self) -> LinMap {
    Self {
      base_dim: self.base_dim,
      cod_arity: self.dom_arity,
      dom_arity: self.cod_arity,
      matrix: self.matrix.transpose(),
    }
  }

  pub fn scale(&self, k: &Scalar) -> LinMap {
    Self { matrix: self.matrix.scale(k), ..self.clone() }
  }

  pub fn checked_add(&self, other: &LinMap) -> Result<LinMap, LinalgError> {
    if self.base_dim != other.base_dim {
      return Err(LinalgError::BaseDim(self.base_dim, other.base_dim));
    }
    Ok(Self { matrix: self.matrix.checked_add(&other.matrix)?, ..self.clone() })
  }

  /// Image of a basis tensor given by its slot indices.
  pub fn apply_basis(&self, slots: &[usize]) -> Vec<Scalar> {
    let col = slots.iter().fold(0, |acc, &s| acc * self.base_dim + s);
    self.matrix.column(col)
  }
}

impl AsRef<Matrix> for LinMap {
  fn as_ref(&self) -> &Matrix {
    &self.matrix
  }
}

impl AsRef<Matrix> for Matrix {
  fn as_ref(&self) -> &Matrix {
    self
  }
}

/// Panics on mismatch; use [`LinMap::compose`] for fallible composition.
impl Mul for &LinMap {
  type Output = LinMap;

  fn mul(self, rhs: &LinMap) -> LinMap {
    self.compose(rhs).unwrap_or_else(|e| panic!("{e}"))
  }
}

impl Add for &LinMap {
  type Output = LinMap;

  fn add(self, rhs: &LinMap) -> LinMap {
    self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
  }
}

impl Sub for &LinMap {
  type Output = LinMap;

  fn sub(self, rhs: &LinMap) -> LinMap {
    self + &(-rhs)
  }
}

impl Neg for &LinMap {
  type Output = LinMap;

  fn neg(self) -> LinMap {
    LinMap { matrix: -&self.matrix, ..self.clone() }
  }
}

/// Permutation of tensor slots. Slot `k` of the output holds slot `perm[k]` of the input,
/// where input slot `s` has dimension `dims[s]`.
pub fn permutation_matrix(dims: &[usize], perm: &[usize]) -> Result<Matrix, LinalgError> {
  let n = dims.len();
  let mut seen = vec![false; n];
  if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
    return Err(LinalgError::Permutation(perm.to_vec()));
  }
  let total: usize = dims.iter().product();
  let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
  let mut m = Matrix::zeros(total, total);
  let mut digits = vec![0usize; n];
  for col in 0..total {
    let mut rest = col;
    for s in (0..n).rev() {
      digits[s] = rest % dims[s];
      rest /= dims[s];
    }
    let row = perm.iter().zip(&out_dims).fold(0, |acc, (&p, &dim)| acc * dim + digits[p]);
    m.set(row, col, Scalar::one());
  }
  Ok(m)
}

/// The flip `τ_{i,j}` on `B^⊗n` swapping slots `i` and `j` (1-based).
pub fn flip_operator(d: usize, n: usize, i: usize, j: usize) -> Result<LinMap, LinalgError> {
  if !(1 <= i && i < j && j <= n) {
    return Err(LinalgError::FlipRange { n, i, j });
  }
  let mut perm: Vec<usize> = (0..n).collect();
  perm.swap(i - 1, j - 1);
  LinMap::new(d, n, n, permutation_matrix(&vec![d; n], &perm)?)
}
