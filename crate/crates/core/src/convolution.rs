//! The convolution algebra `Hom(C, A)` and antipodes found by solving `S ∗ id = id ∗ S = η∘ε`.

use thiserror::Error;

use crate::linalg::{kernel_basis, one, rank, solve_linear, LinMap, LinalgError, Matrix, Scalar};
use crate::structures::{AxiomReport, HomBialgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConvolutionError {
  #[error(transparent)]
  Linalg(#[from] LinalgError),
  #[error("convolution needs {expected}x{expected} maps, got {}x{}", found.0, found.1)]
  Shape { expected: usize, found: (usize, usize) },
  #[error("algebra side has dimension {algebra}, coalgebra side {coalgebra}")]
  Dimension { algebra: usize, coalgebra: usize },
}

/// Algebra data `(μ, η, α)` from one structure and coalgebra data `(Δ, ε, β)` from another of
/// the same dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvolutionContext {
  mu: LinMap,
  eta: LinMap,
  alpha: LinMap,
  delta: LinMap,
  eps: LinMap,
  beta: LinMap,
}

impl ConvolutionContext {
  pub fn new(algebra: &HomBialgebra, coalgebra: &HomBialgebra) -> Result<Self, ConvolutionError> {
    if algebra.dim() != coalgebra.dim() {
      return Err(ConvolutionError::Dimension { algebra: algebra.dim(), coalgebra: coalgebra.dim() });
    }
    Ok(Self {
      mu: algebra.mu().clone(),
      eta: algebra.eta().clone(),
      alpha: algebra.alpha().clone(),
      delta: coalgebra.delta().clone(),
      eps: coalgebra.eps().clone(),
      beta: coalgebra.alpha().clone(),
    })
  }

  /// `End(B)` with both sides taken from `b`.
  pub fn of(b: &HomBialgebra) -> Self {
    Self {
      mu: b.mu().clone(),
      eta: b.eta().clone(),
      alpha: b.alpha().clone(),
      delta: b.delta().clone(),
      eps: b.eps().clone(),
      beta: b.alpha().clone(),
    }
  }

  pub fn dim(&self) -> usize {
    self.alpha.base_dim()
  }

  fn check(&self, f: &LinMap) -> Result<(), ConvolutionError> {
    let d = self.dim();
    if f.base_dim() != d || f.cod_arity() != 1 || f.dom_arity() != 1 {
      return Err(ConvolutionError::Shape { expected: d, found: f.matrix().shape() });
    }
    Ok(())
  }

  /// `f ∗ g = μ∘(f⊗g)∘Δ`.
  pub fn convolve(&self, f: &LinMap, g: &LinMap) -> Result<LinMap, ConvolutionError> {
    self.check(f)?;
    self.check(g)?;
    Ok(self.mu.compose(&f.tensor(g)?)?.compose(&self.delta)?)
  }

  /// The convolution unit `η∘ε`.
  pub fn unit(&self) -> LinMap {
    self.eta.compose(&self.eps).expect("η is d×1 and ε is 1×d")
  }

  /// The twisting map `γ(f) = α∘f∘β` of the convolution algebra.
  pub fn gamma(&self, f: &LinMap) -> Result<LinMap, ConvolutionError> {
    self.check(f)?;
    Ok(self.alpha.compose(f)?.compose(&self.beta)?)
  }
}

/// A solution of `S ∗ id = id ∗ S = η∘ε` and the dimension of the solution space of the
/// homogeneous system; the antipode is unique exactly when that dimension is 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntipodeSolution {
  pub map: LinMap,
  pub free_dim: usize,
}

impl AntipodeSolution {
  pub fn is_unique(&self) -> bool {
    self.free_dim == 0
  }
}

/// Solves both antipode equations as one linear system in the `d²` entries of `S`.
pub fn antipode_solve(b: &HomBialgebra) -> Result<Option<AntipodeSolution>, ConvolutionError> {
  let ctx = ConvolutionContext::of(b);
  let d = b.dim();
  let id = b.id();
  let mut columns = Vec::with_capacity(d * d);
  for idx in 0..d * d {
    let mut m = Matrix::zeros(d, d);
    m.set(idx / d, idx % d, one());
    let e = LinMap::new(d, 1, 1, m)?;
    let mut col = ctx.convolve(&e, &id)?.into_matrix().into_vec();
    col.extend(ctx.convolve(&id, &e)?.into_matrix().into_vec());
    columns.push(col);
  }
  let system = Matrix::from_columns(2 * d * d, &columns)?;
  let unit = ctx.unit().into_matrix().into_vec();
  let rhs: Vec<Scalar> = unit.iter().chain(&unit).cloned().collect();
  let Some(x) = solve_linear(&system, &rhs)? else {
    return Ok(None);
  };
  let free_dim = d * d - rank(&system);
  debug_assert_eq!(free_dim, kernel_basis(&system).dim());
  let map = LinMap::new(d, 1, 1, Matrix::from_vec(d, d, x)?)?;
  Ok(Some(AntipodeSolution { map, free_dim }))
}

/// Exact checks of the antipode equations and the identities an antipode satisfies, plus
/// `S² = id` when `b` is commutative or cocommutative.
pub fn antipode_properties(b: &HomBialgebra, s: &LinMap) -> Result<AxiomReport, ConvolutionError> {
  let ctx = ConvolutionContext::of(b);
  let id = b.id();
  let flip = b.flip();
  let mut r = AxiomReport::new();
  r.push_identity("S * id = eta eps", &ctx.convolve(s, &id)?, &ctx.unit());
  r.push_identity("id * S = eta eps", &ctx.convolve(&id, s)?, &ctx.unit());
  let ss = s.tensor(s)?;
  r.push_identity("S mu = mu (S x S) tau", &s.compose(b.mu())?, &b.mu().compose(&ss)?.compose(&flip)?);
  r.push_identity(
    "Delta S = tau (S x S) Delta",
    &b.delta().compose(s)?,
    &flip.compose(&ss)?.compose(b.delta())?,
  );
  r.push_identity("S eta = eta", &s.compose(b.eta())?, b.eta());
  r.push_identity("eps S = eps", &b.eps().compose(s)?, b.eps());
  r.push_identity("S alpha = alpha S", &s.compose(b.alpha())?, &b.alpha().compose(s)?);
  if b.is_commutative() || b.is_cocommutative() {
    r.push_identity("S^2 = id", &s.compose(s)?, &id);
  }
  Ok(r)
}
