//! Named example structures.

use num_traits::{One, Zero};

use super::{HomBialgebra, StructureError};
use crate::linalg::{int, Matrix, Scalar};

/// The four-dimensional Hom-type Taft–Sweedler bialgebra `(T₂)_λ` with basis
/// `e1 = 1, e2 = g, e3 = x, e4 = gx` and `α = diag(1, 1, λ, λ)`.
pub fn build_taft(lambda: &Scalar) -> HomBialgebra {
  let d = 4;
  let l = lambda.clone();
  let mut mu = Matrix::zeros(d, d * d);
  let mut set_mu = |i: usize, j: usize, k: usize, c: Scalar| mu.set(k, i * d + j, c);
  // Rows of the multiplication table, 0-based: e_i · e_j.
  set_mu(0, 0, 0, int(1));
  set_mu(0, 1, 1, int(1));
  set_mu(0, 2, 2, l.clone());
  set_mu(0, 3, 3, l.clone());
  set_mu(1, 0, 1, int(1));
  set_mu(1, 1, 0, int(1));
  set_mu(1, 2, 3, l.clone());
  set_mu(1, 3, 2, l.clone());
  set_mu(2, 0, 2, l.clone());
  set_mu(2, 1, 3, -l.clone());
  set_mu(3, 0, 3, l.clone());
  set_mu(3, 1, 2, -l.clone());

  let mut delta = Matrix::zeros(d * d, d);
  let mut set_delta = |i: usize, j: usize, k: usize, c: Scalar| delta.set(j * d + k, i, c);
  set_delta(0, 0, 0, int(1));
  set_delta(1, 1, 1, int(1));
  set_delta(2, 2, 0, l.clone());
  set_delta(2, 1, 2, l.clone());
  set_delta(3, 3, 1, l.clone());
  set_delta(3, 0, 3, l.clone());

  let eta = Matrix::column_vector(vec![int(1), int(0), int(0), int(0)]);
  let eps = Matrix::row_vector(vec![int(1), int(1), int(0), int(0)]);
  let alpha = Matrix::from_fn(d, d, |r, c| match (r, c) {
    (0, 0) | (1, 1) => Scalar::one(),
    (2, 2) | (3, 3) => l.clone(),
    _ => Scalar::zero(),
  });
  let labels = ["e1", "e2", "e3", "e4"].map(String::from).to_vec();
  HomBialgebra::from_matrices(labels, mu, delta, eta, eps, alpha).expect("taft shapes are fixed")
}

/// The group algebra of `ℤ/n` twisted by the endomorphism `g ↦ k·g`:
/// `μ(e_g⊗e_h) = e_{k(g+h)}`, `Δ(e_g) = e_{kg}⊗e_{kg}`, `ε(e_g) = 1`, `α(e_g) = e_{kg}`.
pub fn build_group_algebra(n: usize, k: usize) -> Result<HomBialgebra, StructureError> {
  if n == 0 || k >= n {
    return Err(StructureError::Parameter(format!(
      "group algebra needs n >= 1 and 0 <= k < n, got n = {n}, k = {k}"
    )));
  }
  let mut mu = Matrix::zeros(n, n * n);
  let mut delta = Matrix::zeros(n * n, n);
  let mut alpha = Matrix::zeros(n, n);
  for g in 0..n {
    let kg = k * g % n;
    alpha.set(kg, g, int(1));
    delta.set(kg * n + kg, g, int(1));
    for h in 0..n {
      mu.set(k * ((g + h) % n) % n, g * n + h, int(1));
    }
  }
  let mut eta = Matrix::zeros(n, 1);
  eta.set(0, 0, int(1));
  let eps = Matrix::row_vector(vec![int(1); n]);
  let labels = (0..n).map(|g| format!("e{g}")).collect();
  HomBialgebra::from_matrices(labels, mu, delta, eta, eps, alpha)
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::linalg::ratio;

  #[test]
  fn taft_table_entries() {
    let b = build_taft(&int(2));
    // μ(e2⊗e3) = λe4, μ(e3⊗e2) = −λe4, μ(e3⊗e3) = 0.
    assert_eq!(b.mu().apply_basis(&[1, 2]), vec![int(0), int(0), int(0), int(2)]);
    assert_eq!(b.mu().apply_basis(&[2, 1]), vec![int(0), int(0), int(0), int(-2)]);
    assert!(b.mu().apply_basis(&[2, 2]).iter().all(Zero::is_zero));
    assert_eq!(b.counit_vector(), vec![int(1), int(1), int(0), int(0)]);
  }

  #[test]
  fn taft_validates_for_several_parameters() {
    for l in [int(0), int(1), int(2), int(3), int(-1), ratio(1, 2)] {
      let r = build_taft(&l).validate();
      assert!(r.all_pass(), "lambda = {l}:\n{r}");
    }
  }

  #[test]
  fn group_algebras_validate() {
    for (n, k) in [(1, 0), (2, 1), (4, 3), (3, 0), (6, 5), (4, 2)] {
      let r = build_group_algebra(n, k).unwrap().validate();
      assert!(r.all_pass(), "n = {n}, k = {k}:\n{r}");
    }
    assert!(build_group_algebra(3, 3).is_err());
    assert!(build_group_algebra(0, 0).is_err());
  }

  #[test]
  fn altered_taft_sign_breaks_associativity() {
    let b = build_taft(&int(2));
    let mut mu = b.mu().matrix().clone();
    // μ(e3⊗e2): −λe4 → +λe4.
    mu.set(3, 2 * 4 + 1, int(2));
    let bad = HomBialgebra::from_matrices(
      b.labels().to_vec(),
      mu,
      b.delta().matrix().clone(),
      b.eta().matrix().clone(),
      b.eps().matrix().clone(),
      b.alpha().matrix().clone(),
    )
    .unwrap();
    let r = bad.validate();
    let check = r.get("hom_associativity").unwrap();
    assert!(!check.passed);
    assert_eq!(check.witness.as_ref().unwrap().input.len(), 3);
  }
}
