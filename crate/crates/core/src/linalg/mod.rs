//! Exact linear algebra over ℚ: matrices, maps between tensor powers, kernels and spans.

mod echelon;
mod linmap;
mod matrix;
mod scalar;
mod subspace;

use thiserror::Error;

pub use linmap::{flip_operator, permutation_matrix, LinMap};
pub use matrix::Matrix;
pub use scalar::{format_scalar, int, one, parse_scalar, ratio, zero, Scalar};
pub(crate) use subspace::kernel_with_free_columns;
pub use subspace::{
  kernel_basis, quotient_dim, rank, solve_linear, subspace_membership, SpanBuilder, SubspaceBasis,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
  #[error("cannot parse rational literal {0:?} (expected \"p\" or \"p/q\")")]
  ScalarParse(String),
  #[error("ragged input: expected length {expected}, found {found}")]
  Ragged { expected: usize, found: usize },
  #[error("shape mismatch in {op}: {}x{} vs {}x{}", left.0, left.1, right.0, right.1)]
  Shape { left: (usize, usize), right: (usize, usize), op: &'static str },
  #[error("flip positions ({i}, {j}) invalid for {n} tensor slots (need 1 <= i < j <= n)")]
  FlipRange { n: usize, i: usize, j: usize },
  #[error("invalid permutation {0:?}")]
  Permutation(Vec<usize>),
  #[error("base dimensions differ: {0} vs {1}")]
  BaseDim(usize, usize),
  #[error("subspace vector {index} is not contained in the ambient span")]
  NotContained { index: usize },
  #[error("vector has length {found}, ambient dimension is {expected}")]
  Ambient { expected: usize, found: usize },
}
