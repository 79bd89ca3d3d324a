//! Preservation of the unit and counit, and gauging a deformation until it preserves both.

use super::{apply_gauge, residuals, DeformationError, GaugeTransform, TruncatedDeformation};
use crate::linalg::LinMap;

/// The four conditions `μ_s(1⊗x) = μ_s(x⊗1) = 0` and `(ε⊗id)Δ_s = (id⊗ε)Δ_s = 0` at one order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnitCounitCheck {
  pub order: usize,
  pub left_unit: bool,
  pub right_unit: bool,
  pub left_counit: bool,
  pub right_counit: bool,
}

impl UnitCounitCheck {
  pub fn passed(&self) -> bool {
    self.left_unit && self.right_unit && self.left_counit && self.right_counit
  }
}

/// One check per order `1..=N`.
pub fn check_unit_counit(def: &TruncatedDeformation) -> Result<Vec<UnitCounitCheck>, DeformationError> {
  let b = def.base();
  let id = b.id();
  let (eta_id, id_eta) = (b.eta().tensor(&id)?, id.tensor(b.eta())?);
  let (eps_id, id_eps) = (b.eps().tensor(&id)?, id.tensor(b.eps())?);
  (1..=def.order())
    .map(|s| {
      Ok(UnitCounitCheck {
        order: s,
        left_unit: def.mu(s).compose(&eta_id)?.is_zero(),
        right_unit: def.mu(s).compose(&id_eta)?.is_zero(),
        left_counit: eps_id.compose(def.delta(s))?.is_zero(),
        right_counit: id_eps.compose(def.delta(s))?.is_zero(),
      })
    })
    .collect()
}

/// The order-`n` stage gauge `f = u⊗ε − η⊗w + w(1)·η⊗ε`, where `u = μ_n(1⊗1)` and
/// `w = (ε⊗ε)∘Δ_n`. It has `f(1) = u` and `ε∘f = −w + (ε(u) + w(1))ε`.
fn stage_gauge(def: &TruncatedDeformation, n: usize) -> Result<LinMap, DeformationError> {
  let b = def.base();
  let u = def.mu(n).compose(&b.eta().tensor(b.eta())?)?;
  let w = b.eps().tensor(b.eps())?.compose(def.delta(n))?;
  let w1 = w.compose(b.eta())?.matrix().get(0, 0).clone();
  let unit_counit = b.eta().compose(b.eps())?;
  let f = u.compose(b.eps())?.checked_add(&-&b.eta().compose(&w)?)?.checked_add(&unit_counit.scale(&w1))?;
  Ok(f)
}

/// Gauges `def` order by order with `id + f_n tⁿ` until every term kills the unit and the
/// counit. Returns the gauged deformation and the accumulated gauge
/// `(id + f_N t^N)∘…∘(id + f_1 t)`. Needs `α` surjective and `def` valid to its order.
pub fn normalize_unit(
  def: &TruncatedDeformation,
) -> Result<(TruncatedDeformation, GaugeTransform), DeformationError> {
  let b = def.base();
  if !b.alpha_is_surjective() {
    return Err(DeformationError::NotSurjective);
  }
  if let Some(order) = residuals(def)?.first_failure() {
    return Err(DeformationError::Invalid(order));
  }
  let n_max = def.order();
  let mut current = def.clone();
  let mut total = GaugeTransform::identity(b.dim(), n_max);
  for n in 1..=n_max {
    let f = stage_gauge(&current, n)?;
    if f.is_zero() {
      continue;
    }
    let stage = GaugeTransform::single(f, n, n_max);
    current = apply_gauge(&current, &stage)?;
    total = stage.compose(&total)?;
  }
  if let Some(bad) = check_unit_counit(&current)?.into_iter().find(|c| !c.passed()) {
    return Err(DeformationError::Invalid(bad.order));
  }
  Ok((current, total))
}
