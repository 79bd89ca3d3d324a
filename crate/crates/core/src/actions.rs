//! Interior bimodule and bicomodule structures on tensor powers `B^⊗n`, and the (co)module
//! axiom checks.

use thiserror::Error;

use crate::linalg::{flip_operator, LinMap, LinalgError};
use crate::structures::{AxiomReport, HomBialgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
  #[error("tensor power must be at least 1, got {0}")]
  Power(usize),
  #[error(transparent)]
  Linalg(#[from] LinalgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionKind {
  LeftAction,
  RightAction,
  LeftCoaction,
  RightCoaction,
}

/// One of `λ_l^n : B⊗B^⊗n → B^⊗n`, `λ_r^n : B^⊗n⊗B → B^⊗n`, `ρ_l^n : B^⊗n → B⊗B^⊗n`,
/// `ρ_r^n : B^⊗n → B^⊗n⊗B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionMap {
  pub kind: ActionKind,
  pub n: usize,
  pub map: LinMap,
}

fn check_power(n: usize) -> Result<(), ActionError> {
  if n == 0 {
    return Err(ActionError::Power(n));
  }
  Ok(())
}

/// `λ_l^n = (μ⊗λ_l^{n−1})∘τ_{2,3}∘(Δ⊗id^{⊗n})`, with `λ_l^1 = μ`.
pub fn left_action_power(b: &HomBialgebra, n: usize) -> Result<ActionMap, ActionError> {
  check_power(n)?;
  let d = b.dim();
  let mut map = b.mu().clone();
  for k in 2..=n {
    let spread = b.delta().tensor(&LinMap::identity(d, k))?;
    let shuffle = flip_operator(d, k + 2, 2, 3)?;
    map = b.mu().tensor(&map)?.compose(&shuffle)?.compose(&spread)?;
  }
  Ok(ActionMap { kind: ActionKind::LeftAction, n, map })
}

/// `λ_r^n = (λ_r^{n−1}⊗μ)∘τ_{n,n+1}∘(id^{⊗n}⊗Δ)`, with `λ_r^1 = μ`.
pub fn right_action_power(b: &HomBialgebra, n: usize) -> Result<ActionMap, ActionError> {
  check_power(n)?;
  let d = b.dim();
  let mut map = b.mu().clone();
  for k in 2..=n {
    let spread = LinMap::identity(d, k).tensor(b.delta())?;
    let shuffle = flip_operator(d, k + 2, k, k + 1)?;
    map = map.tensor(b.mu())?.compose(&shuffle)?.compose(&spread)?;
  }
  Ok(ActionMap { kind: ActionKind::RightAction, n, map })
}

/// `ρ_l^n = (μ⊗id^{⊗n})∘τ_{2,3}∘(Δ⊗ρ_l^{n−1})`, with `ρ_l^1 = Δ`. No extra twist is applied
/// to the module slots.
pub fn left_coaction_power(b: &HomBialgebra, n: usize) -> Result<ActionMap, ActionError> {
  check_power(n)?;
  let d = b.dim();
  let mut map = b.delta().clone();
  for k in 2..=n {
    let spread = b.delta().tensor(&map)?;
    let shuffle = flip_operator(d, k + 2, 2, 3)?;
    map = b.mu().tensor(&LinMap::identity(d, k))?.compose(&shuffle)?.compose(&spread)?;
  }
  Ok(ActionMap { kind: ActionKind::LeftCoaction, n, map })
}

/// `ρ_r^n = (id^{⊗n}⊗μ)∘τ_{n,n+1}∘(ρ_r^{n−1}⊗Δ)`, with `ρ_r^1 = Δ`.
pub fn right_coaction_power(b: &HomBialgebra, n: usize) -> Result<ActionMap, ActionError> {
  check_power(n)?;
  let d = b.dim();
  let mut map = b.delta().clone();
  for k in 2..=n {
    let spread = map.tensor(b.delta())?;
    let shuffle = flip_operator(d, k + 2, k, k + 1)?;
    map = LinMap::identity(d, k).tensor(b.mu())?.compose(&shuffle)?.compose(&spread)?;
  }
  Ok(ActionMap { kind: ActionKind::RightCoaction, n, map })
}

fn t(a: &LinMap, b: &LinMap) -> Result<LinMap, ActionError> {
  Ok(a.tensor(b)?)
}

fn c(a: &LinMap, b: &LinMap) -> Result<LinMap, ActionError> {
  Ok(a.compose(b)?)
}

/// Left and right Hom-module axioms, their compatibility, and multiplicativity of the actions
/// with respect to the twists.
pub fn validate_bimodule(
  lambda_l: &LinMap,
  lambda_r: &LinMap,
  alpha_a: &LinMap,
  alpha_m: &LinMap,
  mu: &LinMap,
  eta: &LinMap,
) -> Result<AxiomReport, ActionError> {
  let id_m = LinMap::identity(alpha_m.base_dim(), alpha_m.dom_arity());
  let mut r = AxiomReport::new();
  r.push_identity(
    "left_hom_associativity",
    &c(lambda_l, &t(alpha_a, lambda_l)?)?,
    &c(lambda_l, &t(mu, alpha_m)?)?,
  );
  r.push_identity("left_unit", &c(lambda_l, &t(eta, &id_m)?)?, alpha_m);
  r.push_identity(
    "right_hom_associativity",
    &c(lambda_r, &t(lambda_r, alpha_a)?)?,
    &c(lambda_r, &t(alpha_m, mu)?)?,
  );
  r.push_identity("right_unit", &c(lambda_r, &t(&id_m, eta)?)?, alpha_m);
  r.push_identity(
    "bimodule_compatibility",
    &c(lambda_r, &t(lambda_l, alpha_a)?)?,
    &c(lambda_l, &t(alpha_a, lambda_r)?)?,
  );
  r.push_identity("left_multiplicative", &c(alpha_m, lambda_l)?, &c(lambda_l, &t(alpha_a, alpha_m)?)?);
  r.push_identity("right_multiplicative", &c(alpha_m, lambda_r)?, &c(lambda_r, &t(alpha_m, alpha_a)?)?);
  Ok(r)
}

/// Left and right Hom-comodule axioms, their compatibility, and comultiplicativity of the
/// coactions with respect to the twists.
pub fn validate_bicomodule(
  rho_l: &LinMap,
  rho_r: &LinMap,
  beta_c: &LinMap,
  beta_m: &LinMap,
  delta: &LinMap,
  eps: &LinMap,
) -> Result<AxiomReport, ActionError> {
  let id_m = LinMap::identity(beta_m.base_dim(), beta_m.dom_arity());
  let mut r = AxiomReport::new();
  r.push_identity(
    "right_hom_coassociativity",
    &c(&t(rho_r, beta_c)?, rho_r)?,
    &c(&t(beta_m, delta)?, rho_r)?,
  );
  r.push_identity("right_counit", &c(&t(&id_m, eps)?, rho_r)?, beta_m);
  r.push_identity("left_hom_coassociativity", &c(&t(beta_c, rho_l)?, rho_l)?, &c(&t(delta, beta_m)?, rho_l)?);
  r.push_identity("left_counit", &c(&t(eps, &id_m)?, rho_l)?, beta_m);
  r.push_identity("bicomodule_compatibility", &c(&t(beta_c, rho_r)?, rho_l)?, &c(&t(rho_l, beta_c)?, rho_r)?);
  r.push_identity("left_comultiplicative", &c(rho_l, beta_m)?, &c(&t(beta_c, beta_m)?, rho_l)?);
  r.push_identity("right_comultiplicative", &c(rho_r, beta_m)?, &c(&t(beta_m, beta_c)?, rho_r)?);
  Ok(r)
}

/// `(B^⊗n, λ_l^n, λ_r^n, α^⊗n)` checked as a bimodule over `B`.
pub fn power_bimodule_report(b: &HomBialgebra, n: usize) -> Result<AxiomReport, ActionError> {
  validate_bimodule(
    &left_action_power(b, n)?.map,
    &right_action_power(b, n)?.map,
    b.alpha(),
    &b.alpha().tensor_power(n),
    b.mu(),
    b.eta(),
  )
}

/// `(B^⊗n, ρ_l^n, ρ_r^n, α^⊗n)` checked as a bicomodule over `B`.
pub fn power_bicomodule_report(b: &HomBialgebra, n: usize) -> Result<AxiomReport, ActionError> {
  validate_bicomodule(
    &left_coaction_power(b, n)?.map,
    &right_coaction_power(b, n)?.map,
    b.alpha(),
    &b.alpha().tensor_power(n),
    b.delta(),
    b.eps(),
  )
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::linalg::int;
  use crate::structures::{build_group_algebra, build_taft};

  #[test]
  fn base_cases() {
    let b = build_taft(&int(2));
    assert_eq!(&left_action_power(&b, 1).unwrap().map, b.mu());
    assert_eq!(&right_action_power(&b, 1).unwrap().map, b.mu());
    assert_eq!(&left_coaction_power(&b, 1).unwrap().map, b.delta());
    assert_eq!(&right_coaction_power(&b, 1).unwrap().map, b.delta());
    assert_eq!(left_action_power(&b, 0), Err(ActionError::Power(0)));
  }

  #[test]
  fn group_algebra_hand_values() {
    // ℤ/2 with α = id: λ_l²(e_g⊗e_h⊗e_k) = e_{g+h}⊗e_{g+k}.
    let b = build_group_algebra(2, 1).unwrap();
    let l = left_action_power(&b, 2).unwrap().map;
    let r = right_action_power(&b, 2).unwrap().map;
    let rho = left_coaction_power(&b, 2).unwrap().map;
    for g in 0..2 {
      for h in 0..2 {
        for k in 0..2 {
          let col = l.apply_basis(&[g, h, k]);
          let hot = ((g + h) % 2) * 2 + (g + k) % 2;
          assert!(col.iter().enumerate().all(|(i, x)| *x == int((i == hot) as i64)));
          let col = r.apply_basis(&[h, k, g]);
          let hot = ((h + g) % 2) * 2 + (k + g) % 2;
          assert!(col.iter().enumerate().all(|(i, x)| *x == int((i == hot) as i64)));
        }
        // ρ_l²(e_g⊗e_h) = e_{g+h}⊗e_g⊗e_h.
        let col = rho.apply_basis(&[g, h]);
        let hot = ((g + h) % 2) * 4 + g * 2 + h;
        assert!(col.iter().enumerate().all(|(i, x)| *x == int((i == hot) as i64)));
      }
    }
  }

  #[test]
  fn powers_are_bimodules_and_bicomodules() {
    for b in [build_taft(&int(2)), build_group_algebra(4, 3).unwrap()] {
      for n in 1..=3 {
        let r = power_bimodule_report(&b, n).unwrap();
        assert!(r.all_pass(), "bimodule n = {n}:\n{r}");
        let r = power_bicomodule_report(&b, n).unwrap();
        assert!(r.all_pass(), "bicomodule n = {n}:\n{r}");
      }
    }
  }
}
