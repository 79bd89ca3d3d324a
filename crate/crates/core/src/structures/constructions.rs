//! New structures from old: duals, (co)opposites, tensor products and Yau twists.

use super::{AxiomReport, HomBialgebra, StructureError};
use crate::linalg::{permutation_matrix, LinMap};

fn check_square(f: &LinMap, b: &HomBialgebra, b2: &HomBialgebra) -> Result<(), StructureError> {
  let d = b.dim();
  if b2.dim() != d || f.base_dim() != d || f.cod_arity() != 1 || f.dom_arity() != 1 {
    return Err(StructureError::Shape {
      what: "morphism",
      expected: (b2.dim(), d),
      found: f.matrix().shape(),
    });
  }
  Ok(())
}

/// All morphism conditions for `f : B → B'`. The first two are the weak conditions.
pub fn morphism_report(
  f: &LinMap,
  b: &HomBialgebra,
  b2: &HomBialgebra,
) -> Result<AxiomReport, StructureError> {
  check_square(f, b, b2)?;
  let ff = f.tensor_power(2);
  let mut r = AxiomReport::new();
  r.push_identity("multiplicative", &(b2.mu() * &ff), &(f * b.mu()));
  r.push_identity("comultiplicative", &(&ff * b.delta()), &(b2.delta() * f));
  r.push_identity("commutes_with_alpha", &(f * b.alpha()), &(b2.alpha() * f));
  r.push_identity("preserves_unit", &(f * b.eta()), b2.eta());
  r.push_identity("preserves_counit", &(b2.eps() * f), b.eps());
  Ok(r)
}

pub fn is_morphism(f: &LinMap, b: &HomBialgebra, b2: &HomBialgebra) -> Result<bool, StructureError> {
  Ok(morphism_report(f, b, b2)?.all_pass())
}

/// Only `μ'∘f^{⊗2} = f∘μ` and `f^{⊗2}∘Δ = Δ'∘f`.
pub fn is_weak_morphism(f: &LinMap, b: &HomBialgebra, b2: &HomBialgebra) -> Result<bool, StructureError> {
  let r = morphism_report(f, b, b2)?;
  Ok(r.passed("multiplicative") && r.passed("comultiplicative"))
}

/// `B_β = (B, β∘μ, β∘η, Δ∘β, ε∘β, β∘α)` for a Hom-bialgebra endomorphism `β`.
pub fn yau_twist(b: &HomBialgebra, beta: &LinMap) -> Result<HomBialgebra, StructureError> {
  let report = morphism_report(beta, b, b)?;
  if !report.all_pass() {
    return Err(StructureError::NotMorphism(report.failures().map(|c| c.name.clone()).collect()));
  }
  HomBialgebra::new(
    b.labels().to_vec(),
    beta * b.mu(),
    b.delta() * beta,
    beta * b.eta(),
    b.eps() * beta,
    beta * b.alpha(),
  )
}

/// The dual structure on `B*` in the dual basis: every map is transposed and the roles of
/// `μ, η` and `Δ, ε` are exchanged.
pub fn dual(b: &HomBialgebra) -> HomBialgebra {
  HomBialgebra::new(
    b.labels().to_vec(),
    b.delta().transpose(),
    b.mu().transpose(),
    b.eps().transpose(),
    b.eta().transpose(),
    b.alpha().transpose(),
  )
  .expect("transposes have dual shapes")
}

/// `μ^{op} = μ∘τ`.
pub fn opposite(b: &HomBialgebra) -> HomBialgebra {
  HomBialgebra::new(
    b.labels().to_vec(),
    b.mu() * &b.flip(),
    b.delta().clone(),
    b.eta().clone(),
    b.eps().clone(),
    b.alpha().clone(),
  )
  .expect("shapes unchanged")
}

/// `Δ^{cop} = τ∘Δ`.
pub fn coopposite(b: &HomBialgebra) -> HomBialgebra {
  HomBialgebra::new(
    b.labels().to_vec(),
    b.mu().clone(),
    &b.flip() * b.delta(),
    b.eta().clone(),
    b.eps().clone(),
    b.alpha().clone(),
  )
  .expect("shapes unchanged")
}

/// `B1⊗B2` with `μ = (μ1⊗μ2)∘τ_{2,3}`, `Δ = τ_{2,3}∘(Δ1⊗Δ2)` and factorwise unit, counit
/// and twist. The basis vector `e_i⊗f_j` has index `i·d2 + j`.
pub fn tensor_product(b1: &HomBialgebra, b2: &HomBialgebra) -> HomBialgebra {
  let (d1, d2) = (b1.dim(), b2.dim());
  let to_grouped = permutation_matrix(&[d1, d2, d1, d2], &[0, 2, 1, 3]).expect("valid permutation");
  let to_interleaved = permutation_matrix(&[d1, d1, d2, d2], &[0, 2, 1, 3]).expect("valid permutation");
  let kron = |a: &LinMap, b: &LinMap| a.matrix().kron(b.matrix());
  let mu = &kron(b1.mu(), b2.mu()) * &to_grouped;
  let delta = &to_interleaved * &kron(b1.delta(), b2.delta());
  let labels = b1.labels().iter().flat_map(|x| b2.labels().iter().map(move |y| format!("{x}⊗{y}"))).collect();
  HomBialgebra::from_matrices(
    labels,
    mu,
    delta,
    kron(b1.eta(), b2.eta()),
    kron(b1.eps(), b2.eps()),
    kron(b1.alpha(), b2.alpha()),
  )
  .expect("tensor shapes are consistent")
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::linalg::{int, LinMap};
  use crate::structures::{build_group_algebra, build_taft};

  #[test]
  fn alpha_is_an_endomorphism_of_taft() {
    let b = build_taft(&int(2));
    assert!(is_morphism(&b.id(), &b, &b).unwrap());
    assert!(is_morphism(b.alpha(), &b, &b).unwrap());
    let zero = LinMap::zero(4, 1, 1);
    let r = morphism_report(&zero, &b, &b).unwrap();
    assert!(!r.passed("preserves_unit"));
    assert!(is_weak_morphism(&zero, &b, &b).unwrap());
  }

  #[test]
  fn twists_and_duals_validate() {
    let b = build_taft(&int(2));
    assert!(yau_twist(&b, b.alpha()).unwrap().validate().all_pass());
    assert_eq!(yau_twist(&b, &b.id()).unwrap(), b);
    assert!(dual(&b).validate().all_pass());
    assert!(dual(&dual(&b)).same_structure(&b));
    assert!(coopposite(&opposite(&b)).validate().all_pass());
    assert!(opposite(&opposite(&b)).same_structure(&b));
  }

  #[test]
  fn group_tensor_square() {
    let z2 = build_group_algebra(2, 1).unwrap();
    let t = tensor_product(&z2, &z2);
    assert_eq!(t.dim(), 4);
    assert!(t.validate().all_pass());
    assert!(opposite(&z2).same_structure(&z2));
  }

  #[test]
  fn twist_rejects_non_morphisms() {
    let b = build_taft(&int(2));
    let err = yau_twist(&b, &LinMap::zero(4, 1, 1)).unwrap_err();
    assert!(err.to_string().contains("preserves_unit"));
  }
}
