//! Truncated one-parameter formal deformations `μ_t = Σ μ_i tⁱ`, `Δ_t = Σ Δ_i tⁱ` of a
//! Hom-bialgebra with the twist, unit and counit held fixed, computed modulo `t^{N+1}`.

mod gauge;
mod residuals;
mod unit;

use thiserror::Error;

pub use gauge::{apply_gauge, GaugeTransform};
pub use residuals::{
  alpha_associator, alpha_coassociator, obstruction, residuals, Obstruction, OrderResidual, ResidualReport,
};
pub use unit::{check_unit_counit, normalize_unit, UnitCounitCheck};

use crate::cohomology::CohomologyError;
use crate::linalg::{LinMap, LinalgError};
use crate::structures::{yau_twist, HomBialgebra, StructureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeformationError {
  #[error(transparent)]
  Linalg(#[from] LinalgError),
  #[error(transparent)]
  Structure(#[from] StructureError),
  #[error(transparent)]
  Cohomology(#[from] CohomologyError),
  #[error("{what} of order {order} has shape {}x{}, expected {}x{}", found.0, found.1, expected.0, expected.1)]
  Shape { what: &'static str, order: usize, expected: (usize, usize), found: (usize, usize) },
  #[error("{what} must equal the base structure at order 0")]
  BaseMismatch { what: &'static str },
  #[error("{what} of order {order} does not commute with the twisting map")]
  NotCommuting { what: &'static str, order: usize },
  #[error("{0}")]
  Order(String),
  #[error("deformation fails its equations at order {0}")]
  Invalid(usize),
  #[error("twisting map is not surjective")]
  NotSurjective,
  #[error("twisting map is not a morphism of the deformation at order {0}")]
  TwistOrder(usize),
}

/// `(μ_t, Δ_t)` modulo `t^{N+1}`; `mu_terms[0]` and `delta_terms[0]` are the base structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedDeformation {
  base: HomBialgebra,
  mu_terms: Vec<LinMap>,
  delta_terms: Vec<LinMap>,
}

fn check_term(
  what: &'static str,
  order: usize,
  m: &LinMap,
  b: &HomBialgebra,
  (p, q): (usize, usize),
) -> Result<(), DeformationError> {
  let d = b.dim();
  if m.base_dim() != d || m.cod_arity() != p || m.dom_arity() != q {
    return Err(DeformationError::Shape {
      what,
      order,
      expected: (d.pow(p as u32), d.pow(q as u32)),
      found: m.matrix().shape(),
    });
  }
  let a = b.alpha();
  if m.compose(&a.tensor_power(q))? != a.tensor_power(p).compose(m)? {
    return Err(DeformationError::NotCommuting { what, order });
  }
  Ok(())
}

impl TruncatedDeformation {
  /// Full term lists `μ_0..μ_N` and `Δ_0..Δ_N`; the order-0 terms must be the base structure
  /// and every term must commute with `α`.
  pub fn new(
    base: HomBialgebra,
    mu_terms: Vec<LinMap>,
    delta_terms: Vec<LinMap>,
  ) -> Result<Self, DeformationError> {
    if mu_terms.is_empty() || mu_terms.len() != delta_terms.len() {
      return Err(DeformationError::Order(format!(
        "need matching nonempty term lists, got {} and {}",
        mu_terms.len(),
        delta_terms.len()
      )));
    }
    if &mu_terms[0] != base.mu() {
      return Err(DeformationError::BaseMismatch { what: "mu" });
    }
    if &delta_terms[0] != base.delta() {
      return Err(DeformationError::BaseMismatch { what: "delta" });
    }
    for (s, (m, dl)) in mu_terms.iter().zip(&delta_terms).enumerate().skip(1) {
      check_term("mu", s, m, &base, (1, 2))?;
      check_term("delta", s, dl, &base, (2, 1))?;
    }
    Ok(Self { base, mu_terms, delta_terms })
  }

  /// Terms of orders `1..=N` only.
  pub fn from_tail(
    base: HomBialgebra,
    mu_tail: Vec<LinMap>,
    delta_tail: Vec<LinMap>,
  ) -> Result<Self, DeformationError> {
    let mut mu_terms = vec![base.mu().clone()];
    mu_terms.extend(mu_tail);
    let mut delta_terms = vec![base.delta().clone()];
    delta_terms.extend(delta_tail);
    Self::new(base, mu_terms, delta_terms)
  }

  /// The undeformed structure carried to order `order`.
  pub fn zero(base: HomBialgebra, order: usize) -> Self {
    let d = base.dim();
    let mut mu_terms = vec![base.mu().clone()];
    mu_terms.extend((0..order).map(|_| LinMap::zero(d, 1, 2)));
    let mut delta_terms = vec![base.delta().clone()];
    delta_terms.extend((0..order).map(|_| LinMap::zero(d, 2, 1)));
    Self { base, mu_terms, delta_terms }
  }

  pub fn base(&self) -> &HomBialgebra {
    &self.base
  }

  pub fn order(&self) -> usize {
    self.mu_terms.len() - 1
  }

  pub fn mu(&self, s: usize) -> &LinMap {
    &self.mu_terms[s]
  }

  pub fn delta(&self, s: usize) -> &LinMap {
    &self.delta_terms[s]
  }

  pub fn mu_terms(&self) -> &[LinMap] {
    &self.mu_terms
  }

  pub fn delta_terms(&self) -> &[LinMap] {
    &self.delta_terms
  }

  /// Appends order `N + 1` terms.
  pub fn extended(&self, mu: LinMap, delta: LinMap) -> Result<Self, DeformationError> {
    let s = self.order() + 1;
    check_term("mu", s, &mu, &self.base, (1, 2))?;
    check_term("delta", s, &delta, &self.base, (2, 1))?;
    let mut out = self.clone();
    out.mu_terms.push(mu);
    out.delta_terms.push(delta);
    Ok(out)
  }

  /// Drops every term above `order`.
  pub fn truncated(&self, order: usize) -> Self {
    let keep = order.min(self.order()) + 1;
    Self {
      base: self.base.clone(),
      mu_terms: self.mu_terms[..keep].to_vec(),
      delta_terms: self.delta_terms[..keep].to_vec(),
    }
  }
}

/// `(β∘μ_t, Δ_t∘β)` over `yau_twist(base, β)`. `β` must commute with every term:
/// `β∘μ_s = μ_s∘(β⊗β)` and `Δ_s∘β = (β⊗β)∘Δ_s`.
pub fn twist_deformation(
  def: &TruncatedDeformation,
  beta: &LinMap,
) -> Result<TruncatedDeformation, DeformationError> {
  let base = yau_twist(def.base(), beta)?;
  let bb = beta.tensor(beta)?;
  let mut mu_terms = vec![base.mu().clone()];
  let mut delta_terms = vec![base.delta().clone()];
  for s in 1..=def.order() {
    let (m, dl) = (def.mu(s), def.delta(s));
    if beta.compose(m)? != m.compose(&bb)? || dl.compose(beta)? != bb.compose(dl)? {
      return Err(DeformationError::TwistOrder(s));
    }
    mu_terms.push(beta.compose(m)?);
    delta_terms.push(dl.compose(beta)?);
  }
  TruncatedDeformation::new(base, mu_terms, delta_terms)
}
