//! Cochains, coboundaries and cohomology of the twisted Gerstenhaber–Schack bicomplex.
//!
//! `C^{p,q}` is the space of maps `f : B^⊗q → B^⊗p` with `f∘α^{⊗q} = α^{⊗p}∘f`. The total
//! complex is `Ĉⁿ = ⊕_{p+q=n+1} C^{p,q}`, components ordered by increasing `q`, with
//! differential `δ_H ⊕ (−1)^q δ_C`.

mod bicomplex;
mod total;

use thiserror::Error;

pub(crate) use bicomplex::sign;
pub use bicomplex::{Bicomplex, CochainSpace};
pub use total::CohomologyReport;

use crate::actions::ActionError;
use crate::linalg::{LinMap, LinalgError, Matrix, Scalar, SubspaceBasis};
use crate::structures::HomBialgebra;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
  #[error(transparent)]
  Linalg(#[from] LinalgError),
  #[error(transparent)]
  Action(#[from] ActionError),
  #[error("{0}")]
  Degree(String),
  #[error("cochain of bidegree ({p}, {q}) does not commute with the twisting map")]
  NotCommuting { p: usize, q: usize },
  #[error("coboundary basis vector {index} of degree {n} is not a cocycle")]
  Containment { n: usize, index: usize },
}

/// An element of `C^{p,q}`: a map `B^⊗q → B^⊗p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
  pub p: usize,
  pub q: usize,
  pub map: LinMap,
}

impl Cochain {
  pub fn new(p: usize, q: usize, map: LinMap) -> Self {
    debug_assert_eq!((map.cod_arity(), map.dom_arity()), (p, q));
    Self { p, q, map }
  }

  pub fn zero(d: usize, p: usize, q: usize) -> Self {
    Self { p, q, map: LinMap::zero(d, p, q) }
  }
}

/// An element of `Ĉⁿ`; `components[k]` has bidegree `(n − k, k + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainVector {
  pub n: usize,
  pub components: Vec<Cochain>,
}

impl CochainVector {
  pub fn zero(d: usize, n: usize) -> Self {
    Self { n, components: (1..=n).map(|q| Cochain::zero(d, n + 1 - q, q)).collect() }
  }

  /// Builds `Ĉⁿ` elements from maps listed by increasing `q`.
  pub fn from_maps(n: usize, maps: Vec<LinMap>) -> Result<Self, CohomologyError> {
    if n == 0 || maps.len() != n {
      return Err(CohomologyError::Degree(format!("degree {n} needs {n} components, got {}", maps.len())));
    }
    let mut components = Vec::with_capacity(n);
    for (k, map) in maps.into_iter().enumerate() {
      let (p, q) = (n - k, k + 1);
      if map.cod_arity() != p || map.dom_arity() != q {
        return Err(CohomologyError::Degree(format!(
          "component {k} of degree {n} must have bidegree ({p}, {q}), got ({}, {})",
          map.cod_arity(),
          map.dom_arity()
        )));
      }
      components.push(Cochain::new(p, q, map));
    }
    Ok(Self { n, components })
  }

  /// Degree-2 element built from `g ∈ C^{2,1}` and `f ∈ C^{1,2}`.
  pub fn degree_two(g: LinMap, f: LinMap) -> Result<Self, CohomologyError> {
    Self::from_maps(2, vec![g, f])
  }

  /// The component of bidegree `(n + 1 − q, q)`.
  pub fn component(&self, q: usize) -> &Cochain {
    &self.components[q - 1]
  }

  pub fn is_zero(&self) -> bool {
    self.components.iter().all(|c| c.map.is_zero())
  }

  /// All entries of all components, concatenated.
  pub fn flatten(&self) -> Vec<Scalar> {
    self.components.iter().flat_map(|c| c.map.matrix().as_slice().iter().cloned()).collect()
  }

  pub fn checked_add(&self, other: &Self) -> Result<Self, CohomologyError> {
    if self.n != other.n {
      return Err(CohomologyError::Degree(format!("cannot add degrees {} and {}", self.n, other.n)));
    }
    let components = self
      .components
      .iter()
      .zip(&other.components)
      .map(|(a, b)| Ok(Cochain::new(a.p, a.q, a.map.checked_add(&b.map)?)))
      .collect::<Result<_, CohomologyError>>()?;
    Ok(Self { n: self.n, components })
  }

  pub fn scale(&self, k: &Scalar) -> Self {
    let components = self.components.iter().map(|c| Cochain::new(c.p, c.q, c.map.scale(k))).collect();
    Self { n: self.n, components }
  }

  pub fn neg(&self) -> Self {
    self.scale(&-<Scalar as num_traits::One>::one())
  }
}

/// Basis of `C^{p,q}` inside the `d^{p+q}`-dimensional space of row-major vectorized maps.
pub fn cochain_space_basis(b: &HomBialgebra, p: usize, q: usize) -> Result<SubspaceBasis, CohomologyError> {
  Ok(Bicomplex::new(b).space(p, q)?.basis().clone())
}

/// `δ_H : Hom(B^⊗q, B^⊗p) → Hom(B^⊗(q+1), B^⊗p)` on vectorized maps.
pub fn delta_h(b: &HomBialgebra, p: usize, q: usize) -> Result<Matrix, CohomologyError> {
  let bc = Bicomplex::new(b);
  bc.vectorize(p, q, |f| bc.delta_h(f))
}

/// `δ_C : Hom(B^⊗q, B^⊗p) → Hom(B^⊗q, B^⊗(p+1))` on vectorized maps.
pub fn delta_c(b: &HomBialgebra, p: usize, q: usize) -> Result<Matrix, CohomologyError> {
  let bc = Bicomplex::new(b);
  bc.vectorize(p, q, |f| bc.delta_c(f))
}

pub fn face_d(b: &HomBialgebra, i: usize, p: usize, q: usize) -> Result<Matrix, CohomologyError> {
  let bc = Bicomplex::new(b);
  bc.vectorize(p, q, |f| bc.face_d(i, f))
}

pub fn face_s(b: &HomBialgebra, i: usize, p: usize, q: usize) -> Result<Matrix, CohomologyError> {
  let bc = Bicomplex::new(b);
  bc.vectorize(p, q, |f| bc.face_s(i, f))
}

/// `δⁿ : Ĉⁿ → Ĉⁿ⁺¹` in the coordinates of the α-commuting bases.
pub fn total_delta(b: &HomBialgebra, n: usize) -> Result<Matrix, CohomologyError> {
  Bicomplex::new(b).total_delta(n)
}

pub fn cohomology(b: &HomBialgebra, n: usize) -> Result<CohomologyReport, CohomologyError> {
  Bicomplex::new(b).cohomology(n)
}

pub fn is_cocycle(b: &HomBialgebra, v: &CochainVector) -> Result<bool, CohomologyError> {
  Bicomplex::new(b).is_cocycle(v)
}

pub fn coboundary_witness(
  b: &HomBialgebra,
  v: &CochainVector,
) -> Result<Option<CochainVector>, CohomologyError> {
  Bicomplex::new(b).coboundary_witness(v)
}
