//! The coefficient-of-`t^s` equations and the obstruction to extending a deformation.

use super::{DeformationError, TruncatedDeformation};
use crate::cohomology::{Bicomplex, CochainVector};
use crate::linalg::{flip_operator, LinMap};

/// `μ_i ∘_α μ_j = μ_i∘(α⊗μ_j) − μ_i∘(μ_j⊗α)`.
pub fn alpha_associator(mu_i: &LinMap, mu_j: &LinMap, alpha: &LinMap) -> Result<LinMap, DeformationError> {
  let left = mu_i.compose(&alpha.tensor(mu_j)?)?;
  let right = mu_i.compose(&mu_j.tensor(alpha)?)?;
  Ok(left.checked_add(&-&right)?)
}

/// `Δ_i ∘_α Δ_j = (Δ_j⊗α)∘Δ_i − (α⊗Δ_j)∘Δ_i`.
pub fn alpha_coassociator(
  delta_i: &LinMap,
  delta_j: &LinMap,
  alpha: &LinMap,
) -> Result<LinMap, DeformationError> {
  let left = delta_j.tensor(alpha)?.compose(delta_i)?;
  let right = alpha.tensor(delta_j)?.compose(delta_i)?;
  Ok(left.checked_add(&-&right)?)
}

/// The three order-`s` left-hand sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderResidual {
  pub order: usize,
  /// `Σ_{i+j+k=s} μ_i ∘_{α_k} μ_j`, a `d × d³` map.
  pub assoc: LinMap,
  /// `Σ_{i+j+k=s} Δ_i ∘_{α_k} Δ_j`, a `d³ × d` map.
  pub coassoc: LinMap,
  /// `Σ_{i+j=s} Δ_i∘μ_j − Σ_{i+j+k+r=s} (μ_i⊗μ_j)∘τ_{2,3}∘(Δ_k⊗Δ_r)`, a `d² × d²` map.
  pub compat: LinMap,
}

impl OrderResidual {
  pub fn assoc_vanishes(&self) -> bool {
    self.assoc.is_zero()
  }

  pub fn coassoc_vanishes(&self) -> bool {
    self.coassoc.is_zero()
  }

  pub fn compat_vanishes(&self) -> bool {
    self.compat.is_zero()
  }

  pub fn vanishes(&self) -> bool {
    self.assoc_vanishes() && self.coassoc_vanishes() && self.compat_vanishes()
  }

  /// `(coassoc, −compat, assoc)` placed in `C^{3,1} ⊕ C^{2,2} ⊕ C^{1,3}`. At order 1 this is
  /// exactly `δ²(Δ_1, μ_1)`.
  pub fn to_cochain_vector(&self) -> Result<CochainVector, DeformationError> {
    Ok(CochainVector::from_maps(3, vec![self.coassoc.clone(), -&self.compat, self.assoc.clone()])?)
  }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualReport {
  pub orders: Vec<OrderResidual>,
}

impl ResidualReport {
  /// Whether every equation of order `0..=s` holds.
  pub fn valid_to(&self, s: usize) -> bool {
    self.orders.iter().take(s + 1).all(OrderResidual::vanishes)
  }

  pub fn all_vanish(&self) -> bool {
    self.orders.iter().all(OrderResidual::vanishes)
  }

  pub fn first_failure(&self) -> Option<usize> {
    self.orders.iter().find(|r| !r.vanishes()).map(|r| r.order)
  }
}

/// The order-`s` sums restricted to indices `≤ max_index`. The twist series is `α_0 = α`,
/// `α_k = 0` for `k ≥ 1`, so only `k = 0` contributes to the twisted terms.
fn order_sums(
  def: &TruncatedDeformation,
  s: usize,
  max_index: usize,
) -> Result<OrderResidual, DeformationError> {
  let b = def.base();
  let d = b.dim();
  let alpha_terms = |k: usize| if k == 0 { b.alpha().clone() } else { LinMap::zero(d, 1, 1) };
  let shuffle = flip_operator(d, 4, 2, 3)?;
  let idx = |i: usize| i <= max_index;
  let mut assoc = LinMap::zero(d, 1, 3);
  let mut coassoc = LinMap::zero(d, 3, 1);
  let mut compat = LinMap::zero(d, 2, 2);
  for i in (0..=s).filter(|&i| idx(i)) {
    for j in (0..=s - i).filter(|&j| idx(j)) {
      let k = s - i - j;
      let a = alpha_terms(k);
      if !a.is_zero() {
        assoc = assoc.checked_add(&alpha_associator(def.mu(i), def.mu(j), &a)?)?;
        coassoc = coassoc.checked_add(&alpha_coassociator(def.delta(i), def.delta(j), &a)?)?;
      }
    }
    let j = s - i;
    if idx(j) {
      compat = compat.checked_add(&def.delta(i).compose(def.mu(j))?)?;
    }
  }
  for i in (0..=s).filter(|&i| idx(i)) {
    for j in (0..=s - i).filter(|&j| idx(j)) {
      let mm = def.mu(i).tensor(def.mu(j))?.compose(&shuffle)?;
      for k in (0..=s - i - j).filter(|&k| idx(k)) {
        let r = s - i - j - k;
        if !idx(r) {
          continue;
        }
        compat = compat.checked_add(&-&mm.compose(&def.delta(k).tensor(def.delta(r))?)?)?;
      }
    }
  }
  Ok(OrderResidual { order: s, assoc, coassoc, compat })
}

/// Residuals of the deformation equations for every order `0..=N`.
pub fn residuals(def: &TruncatedDeformation) -> Result<ResidualReport, DeformationError> {
  let orders = (0..=def.order()).map(|s| order_sums(def, s, s)).collect::<Result<_, _>>()?;
  Ok(ResidualReport { orders })
}

/// The order-`s` obstruction together with an extension, when one exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
  pub order: usize,
  /// The quadratic part of the order-`s` equations as an element of `Ĉ³`.
  pub class: CochainVector,
  /// `(μ_s, Δ_s)` making the order-`s` equations hold, if the class is a coboundary.
  pub extension: Option<(LinMap, LinMap)>,
}

/// Splits the order-`s` equations as `δ²(Δ_s, μ_s) + class`, where `class` collects the terms
/// built from orders `1..s−1`, and solves `δ²(Δ_s, μ_s) = −class`.
pub fn obstruction(def: &TruncatedDeformation, s: usize) -> Result<Obstruction, DeformationError> {
  if s == 0 {
    return Err(DeformationError::Order("obstructions start at order 1".into()));
  }
  if def.order() + 1 < s {
    return Err(DeformationError::Order(format!("order {s} needs terms through order {}", s - 1)));
  }
  let lower = def.truncated(s - 1);
  let report = residuals(&lower)?;
  if let Some(order) = report.first_failure() {
    return Err(DeformationError::Invalid(order));
  }
  // With index s excluded, the terms pairing μ_s or Δ_s with order-0 data drop out.
  let d = def.base().dim();
  let full = lower.extended(LinMap::zero(d, 1, 2), LinMap::zero(d, 2, 1))?;
  let class = order_sums(&full, s, s - 1)?.to_cochain_vector()?;
  let bc = Bicomplex::new(def.base());
  let extension = bc.coboundary_witness(&class)?.map(|w| {
    let w = w.neg();
    (w.component(2).map.clone(), w.component(1).map.clone())
  });
  Ok(Obstruction { order: s, class, extension })
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::linalg::int;
  use crate::structures::{build_group_algebra, build_taft};

  #[test]
  fn base_associators_vanish() {
    let b = build_taft(&int(2));
    assert!(alpha_associator(b.mu(), b.mu(), b.alpha()).unwrap().is_zero());
    assert!(alpha_coassociator(b.delta(), b.delta(), b.alpha()).unwrap().is_zero());
  }

  #[test]
  fn zero_tail_has_no_residuals() {
    for b in [build_taft(&int(3)), build_group_algebra(3, 2).unwrap()] {
      let r = residuals(&TruncatedDeformation::zero(b, 3)).unwrap();
      assert_eq!(r.orders.len(), 4);
      assert!(r.all_vanish());
    }
  }

  #[test]
  fn first_obstruction_is_zero() {
    let z = TruncatedDeformation::zero(build_taft(&int(2)), 2);
    let ob = obstruction(&z, 1).unwrap();
    assert!(ob.class.is_zero());
    let (mu, delta) = ob.extension.unwrap();
    assert!(mu.is_zero() && delta.is_zero());
  }

  #[test]
  fn obstruction_needs_lower_terms() {
    let z = TruncatedDeformation::zero(build_taft(&int(2)), 1);
    assert!(matches!(obstruction(&z, 3), Err(DeformationError::Order(_))));
    assert!(matches!(obstruction(&z, 0), Err(DeformationError::Order(_))));
  }
}
