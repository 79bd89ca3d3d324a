//! Formal automorphisms `Φ_t = id + Σ Φ_i tⁱ` and their action on deformations.

use super::{DeformationError, TruncatedDeformation};
use crate::linalg::LinMap;

/// `Φ_0..Φ_N` with `Φ_0 = id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeTransform {
  terms: Vec<LinMap>,
}

impl GaugeTransform {
  pub fn new(terms: Vec<LinMap>) -> Result<Self, DeformationError> {
    let Some(first) = terms.first() else {
      return Err(DeformationError::Order("a gauge needs at least its order-0 term".into()));
    };
    let d = first.base_dim();
    if first != &LinMap::identity(d, 1) {
      return Err(DeformationError::Order("the order-0 gauge term must be the identity".into()));
    }
    for (i, t) in terms.iter().enumerate() {
      if t.base_dim() != d || t.cod_arity() != 1 || t.dom_arity() != 1 {
        return Err(DeformationError::Shape {
          what: "gauge",
          order: i,
          expected: (d, d),
          found: t.matrix().shape(),
        });
      }
    }
    Ok(Self { terms })
  }

  /// Terms of orders `1..=N` only.
  pub fn from_tail(d: usize, tail: Vec<LinMap>) -> Result<Self, DeformationError> {
    let mut terms = vec![LinMap::identity(d, 1)];
    terms.extend(tail);
    Self::new(terms)
  }

  pub fn identity(d: usize, order: usize) -> Self {
    let mut terms = vec![LinMap::identity(d, 1)];
    terms.extend((0..order).map(|_| LinMap::zero(d, 1, 1)));
    Self { terms }
  }

  /// `id + Φ tⁿ`, truncated at `order`.
  pub fn single(phi: LinMap, n: usize, order: usize) -> Self {
    let mut g = Self::identity(phi.base_dim(), order);
    if n >= 1 && n <= order {
      g.terms[n] = phi;
    }
    g
  }

  pub fn order(&self) -> usize {
    self.terms.len() - 1
  }

  pub fn dim(&self) -> usize {
    self.terms[0].base_dim()
  }

  pub fn term(&self, i: usize) -> &LinMap {
    &self.terms[i]
  }

  pub fn terms(&self) -> &[LinMap] {
    &self.terms
  }

  pub fn is_identity(&self) -> bool {
    self.terms[1..].iter().all(LinMap::is_zero)
  }

  /// The series product `self∘other`, truncated at the smaller order.
  pub fn compose(&self, other: &Self) -> Result<Self, DeformationError> {
    let n = self.order().min(other.order());
    let d = self.dim();
    let mut terms = Vec::with_capacity(n + 1);
    for s in 0..=n {
      let mut t = LinMap::zero(d, 1, 1);
      for i in 0..=s {
        t = t.checked_add(&self.terms[i].compose(&other.terms[s - i])?)?;
      }
      terms.push(t);
    }
    Ok(Self { terms })
  }

  /// `Φ_t⁻¹` through `Ψ_0 = id`, `Ψ_n = −Σ_{k=1}^{n} Φ_k Ψ_{n−k}`.
  pub fn inverse(&self) -> Result<Self, DeformationError> {
    let d = self.dim();
    let mut terms = vec![LinMap::identity(d, 1)];
    for n in 1..=self.order() {
      let mut t = LinMap::zero(d, 1, 1);
      for k in 1..=n {
        t = t.checked_add(&self.terms[k].compose(&terms[n - k])?)?;
      }
      terms.push(-&t);
    }
    Ok(Self { terms })
  }

  pub fn commutes_with(&self, alpha: &LinMap) -> Result<Option<usize>, DeformationError> {
    for (i, t) in self.terms.iter().enumerate().skip(1) {
      if t.compose(alpha)? != alpha.compose(t)? {
        return Ok(Some(i));
      }
    }
    Ok(None)
  }
}

/// Series coefficients of `Σ_{k+l=m} X_k⊗Y_l`.
fn tensor_series(x: &[LinMap], y: &[LinMap], n: usize) -> Result<Vec<LinMap>, DeformationError> {
  let d = x[0].base_dim();
  let (p, q) = (x[0].cod_arity() + y[0].cod_arity(), x[0].dom_arity() + y[0].dom_arity());
  (0..=n)
    .map(|m| {
      let mut t = LinMap::zero(d, p, q);
      for k in 0..=m {
        t = t.checked_add(&x[k].tensor(&y[m - k])?)?;
      }
      Ok(t)
    })
    .collect()
}

/// `μ′_t = Φ_t∘μ_t∘(Φ_t⁻¹⊗Φ_t⁻¹)` and `Δ′_t = (Φ_t⊗Φ_t)∘Δ_t∘Φ_t⁻¹`, so that
/// `Φ_t∘μ_t = μ′_t∘(Φ_t⊗Φ_t)` and `(Φ_t⊗Φ_t)∘Δ_t = Δ′_t∘Φ_t`.
pub fn apply_gauge(
  def: &TruncatedDeformation,
  phi: &GaugeTransform,
) -> Result<TruncatedDeformation, DeformationError> {
  let n = def.order();
  if phi.order() < n {
    return Err(DeformationError::Order(format!("gauge of order {} cannot act on order {n}", phi.order())));
  }
  if phi.dim() != def.base().dim() {
    return Err(DeformationError::Order(format!(
      "gauge acts on dimension {}, not {}",
      phi.dim(),
      def.base().dim()
    )));
  }
  if let Some(order) = phi.commutes_with(def.base().alpha())? {
    return Err(DeformationError::NotCommuting { what: "gauge", order });
  }
  let psi = phi.inverse()?;
  let pp = tensor_series(psi.terms(), psi.terms(), n)?;
  let ff = tensor_series(phi.terms(), phi.terms(), n)?;
  let d = phi.dim();
  let mut mu_terms = Vec::with_capacity(n + 1);
  let mut delta_terms = Vec::with_capacity(n + 1);
  for s in 0..=n {
    let mut mu = LinMap::zero(d, 1, 2);
    let mut delta = LinMap::zero(d, 2, 1);
    for (i, phi_pair) in ff.iter().enumerate().take(s + 1) {
      for j in 0..=s - i {
        let m = s - i - j;
        mu = mu.checked_add(&phi.term(i).compose(def.mu(j))?.compose(&pp[m])?)?;
        delta = delta.checked_add(&phi_pair.compose(def.delta(j))?.compose(psi.term(m))?)?;
      }
    }
    mu_terms.push(mu);
    delta_terms.push(delta);
  }
  TruncatedDeformation::new(def.base().clone(), mu_terms, delta_terms)
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::linalg::{int, Matrix};

  fn diag(d: &[i64]) -> LinMap {
    LinMap::new(d.len(), 1, 1, Matrix::from_fn(d.len(), d.len(), |r, c| int(if r == c { d[r] } else { 0 })))
      .unwrap()
  }

  #[test]
  fn inverse_is_two_sided() {
    let g = GaugeTransform::from_tail(2, vec![diag(&[1, 2]), diag(&[0, -3]), diag(&[5, 1])]).unwrap();
    let inv = g.inverse().unwrap();
    assert!(g.compose(&inv).unwrap().is_identity());
    assert!(inv.compose(&g).unwrap().is_identity());
  }

  #[test]
  fn order_zero_term_must_be_identity() {
    assert!(GaugeTransform::new(vec![diag(&[1, 2])]).is_err());
    assert!(GaugeTransform::new(vec![]).is_err());
  }

  #[test]
  fn single_places_one_term() {
    let g = GaugeTransform::single(diag(&[1, 1]), 2, 3);
    assert!(g.term(1).is_zero() && !g.term(2).is_zero() && g.term(3).is_zero());
  }
}
