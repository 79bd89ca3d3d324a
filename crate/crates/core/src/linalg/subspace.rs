//! Kernels, ranks, solving, and span arithmetic.

use num_traits::Zero;

use super::echelon::{Echelon, SpanTracker};
use super::{LinalgError, Matrix, Scalar};

/// A linearly independent list of vectors in `ℚ^ambient_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
  ambient_dim: usize,
  vectors: Vec<Vec<Scalar>>,
}

impl SubspaceBasis {
  pub fn zero(ambient_dim: usize) -> Self {
    Self { ambient_dim, vectors: Vec::new() }
  }

  pub fn full(ambient_dim: usize) -> Self {
    let vectors = (0..ambient_dim)
      .map(|i| {
        let mut v = vec![Scalar::zero(); ambient_dim];
        v[i] = super::one();
        v
      })
      .collect();
    Self { ambient_dim, vectors }
  }

  /// Basis of the span of `vectors`, keeping the first independent ones in order.
  pub fn spanned_by(ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Result<Self, LinalgError> {
    let mut span = SpanBuilder::new(ambient_dim);
    let mut kept = Vec::new();
    for v in vectors {
      if span.insert(v)? {
        kept.push(v.clone());
      }
    }
    Ok(Self { ambient_dim, vectors: kept })
  }

  /// Accepts `vectors` as a basis after confirming independence.
  pub fn new(ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
    let basis = Self::spanned_by(ambient_dim, &vectors)?;
    if basis.dim() != vectors.len() {
      return Err(LinalgError::Ragged { expected: vectors.len(), found: basis.dim() });
    }
    Ok(basis)
  }

  pub fn ambient_dim(&self) -> usize {
    self.ambient_dim
  }

  pub fn dim(&self) -> usize {
    self.vectors.len()
  }

  pub fn vectors(&self) -> &[Vec<Scalar>] {
    &self.vectors
  }

  pub fn into_vectors(self) -> Vec<Vec<Scalar>> {
    self.vectors
  }

  /// The basis vectors as columns of an `ambient_dim × dim` matrix.
  pub fn to_matrix(&self) -> Matrix {
    Matrix::from_fn(self.ambient_dim, self.dim(), |r, c| self.vectors[c][r].clone())
  }

  fn tracker(&self) -> SpanTracker {
    let mut t = SpanTracker::new(self.ambient_dim);
    for v in &self.vectors {
      t.insert(v);
    }
    t
  }
}

/// Incremental span used for membership tests and greedy basis completion.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
  tracker: SpanTracker,
  ambient_dim: usize,
}

impl SpanBuilder {
  pub fn new(ambient_dim: usize) -> Self {
    Self { tracker: SpanTracker::new(ambient_dim), ambient_dim }
  }

  pub fn rank(&self) -> usize {
    self.tracker.rank()
  }

  fn check(&self, v: &[Scalar]) -> Result<(), LinalgError> {
    if v.len() != self.ambient_dim {
      return Err(LinalgError::Ambient { expected: self.ambient_dim, found: v.len() });
    }
    Ok(())
  }

  pub fn contains(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
    self.check(v)?;
    Ok(self.tracker.contains(v))
  }

  /// Adds `v`; returns whether it was independent of what was already there.
  pub fn insert(&mut self, v: &[Scalar]) -> Result<bool, LinalgError> {
    self.check(v)?;
    Ok(self.tracker.insert(v))
  }
}

pub fn rank(m: &impl AsRef<Matrix>) -> usize {
  Echelon::of(m.as_ref()).rank()
}

/// Null space of `m`. Each basis vector has a 1 at its own free column and 0 at every other
/// free column, so coordinates of a kernel element are its values at the free columns.
pub fn kernel_basis(m: &impl AsRef<Matrix>) -> SubspaceBasis {
  let m = m.as_ref();
  SubspaceBasis { ambient_dim: m.cols(), vectors: Echelon::of(m).kernel() }
}

/// Kernel basis together with the free column each basis vector is pinned to.
pub(crate) fn kernel_with_free_columns(m: &Matrix) -> (SubspaceBasis, Vec<usize>) {
  let ech = Echelon::of(m);
  let mut is_pivot = vec![false; m.cols()];
  for &p in &ech.pivots {
    is_pivot[p] = true;
  }
  let free = (0..m.cols()).filter(|&j| !is_pivot[j]).collect();
  (SubspaceBasis { ambient_dim: m.cols(), vectors: ech.kernel() }, free)
}

/// Some `x` with `m·x = b`, or `None` when the system is inconsistent. Free variables are 0.
pub fn solve_linear(m: &impl AsRef<Matrix>, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
  let m = m.as_ref();
  if b.len() != m.rows() {
    return Err(LinalgError::Shape { left: m.shape(), right: (b.len(), 1), op: "solve" });
  }
  let augmented = m.hstack(&Matrix::column_vector(b.to_vec()))?;
  let ech = Echelon::of(&augmented);
  let n = m.cols();
  if ech.pivots.last() == Some(&n) {
    return Ok(None);
  }
  let mut x = vec![Scalar::zero(); n];
  for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
    x[pc] = Scalar::new(row[n].clone(), row[pc].clone());
  }
  Ok(Some(x))
}

pub fn subspace_membership(s: &SubspaceBasis, v: &[Scalar]) -> Result<bool, LinalgError> {
  if v.len() != s.ambient_dim {
    return Err(LinalgError::Ambient { expected: s.ambient_dim, found: v.len() });
  }
  Ok(s.tracker().contains(v))
}

/// `dim Z − dim B` after checking that every vector of `b` lies in the span of `z`.
pub fn quotient_dim(z: &SubspaceBasis, b: &SubspaceBasis) -> Result<usize, LinalgError> {
  if z.ambient_dim != b.ambient_dim {
    return Err(LinalgError::Ambient { expected: z.ambient_dim, found: b.ambient_dim });
  }
  let span = z.tracker();
  if let Some(index) = b.vectors.iter().position(|v| !span.contains(v)) {
    return Err(LinalgError::NotContained { index });
  }
  Ok(z.dim() - b.dim())
}
