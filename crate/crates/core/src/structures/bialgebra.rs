use super::{AxiomReport, StructureError};
use crate::linalg::{flip_operator, rank, LinMap, Matrix, Scalar};

/// A Hom-bialgebra `(B, μ, η, Δ, ε, α)` given by structure constants in a fixed basis.
///
/// `μ` is `d × d²`, `Δ` is `d² × d`, `η` is `d × 1`, `ε` is `1 × d` and `α` is `d × d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBialgebra {
  labels: Vec<String>,
  mu: LinMap,
  delta: LinMap,
  eta: LinMap,
  eps: LinMap,
  alpha: LinMap,
}

fn expect_shape(what: &'static str, m: &LinMap, d: usize, p: usize, q: usize) -> Result<(), StructureError> {
  if m.base_dim() != d || m.cod_arity() != p || m.dom_arity() != q {
    return Err(StructureError::Shape {
      what,
      expected: (d.pow(p as u32), d.pow(q as u32)),
      found: m.matrix().shape(),
    });
  }
  Ok(())
}

impl HomBialgebra {
  /// Assembles a structure after checking shapes. Axioms are not checked here; see
  /// [`HomBialgebra::validate`].
  pub fn new(
    labels: Vec<String>,
    mu: LinMap,
    delta: LinMap,
    eta: LinMap,
    eps: LinMap,
    alpha: LinMap,
  ) -> Result<Self, StructureError> {
    let d = labels.len();
    if d == 0 {
      return Err(StructureError::Parameter("dimension must be at least 1".into()));
    }
    expect_shape("mu", &mu, d, 1, 2)?;
    expect_shape("delta", &delta, d, 2, 1)?;
    expect_shape("eta", &eta, d, 1, 0)?;
    expect_shape("eps", &eps, d, 0, 1)?;
    expect_shape("alpha", &alpha, d, 1, 1)?;
    Ok(Self { labels, mu, delta, eta, eps, alpha })
  }

  /// Same as [`HomBialgebra::new`] from bare matrices.
  pub fn from_matrices(
    labels: Vec<String>,
    mu: Matrix,
    delta: Matrix,
    eta: Matrix,
    eps: Matrix,
    alpha: Matrix,
  ) -> Result<Self, StructureError> {
    let d = labels.len();
    Self::new(
      labels,
      LinMap::new(d, 1, 2, mu)?,
      LinMap::new(d, 2, 1, delta)?,
      LinMap::new(d, 1, 0, eta)?,
      LinMap::new(d, 0, 1, eps)?,
      LinMap::new(d, 1, 1, alpha)?,
    )
  }

  pub fn dim(&self) -> usize {
    self.labels.len()
  }

  pub fn labels(&self) -> &[String] {
    &self.labels
  }

  pub fn mu(&self) -> &LinMap {
    &self.mu
  }

  pub fn delta(&self) -> &LinMap {
    &self.delta
  }

  pub fn eta(&self) -> &LinMap {
    &self.eta
  }

  pub fn eps(&self) -> &LinMap {
    &self.eps
  }

  pub fn alpha(&self) -> &LinMap {
    &self.alpha
  }

  /// The unit element `1_B` as a coordinate vector.
  pub fn unit_vector(&self) -> Vec<Scalar> {
    self.eta.matrix().column(0)
  }

  pub fn counit_vector(&self) -> Vec<Scalar> {
    self.eps.matrix().row(0).to_vec()
  }

  pub fn id(&self) -> LinMap {
    LinMap::identity(self.dim(), 1)
  }

  /// `τ` on `B⊗B`.
  pub fn flip(&self) -> LinMap {
    flip_operator(self.dim(), 2, 1, 2).expect("valid flip range")
  }

  /// Equality of all structure maps, ignoring basis labels.
  pub fn same_structure(&self, other: &Self) -> bool {
    self.mu == other.mu
      && self.delta == other.delta
      && self.eta == other.eta
      && self.eps == other.eps
      && self.alpha == other.alpha
  }

  pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, StructureError> {
    if labels.len() != self.dim() {
      return Err(StructureError::Parameter(format!(
        "expected {} basis labels, got {}",
        self.dim(),
        labels.len()
      )));
    }
    self.labels = labels;
    Ok(self)
  }

  pub fn is_commutative(&self) -> bool {
    &self.mu * &self.flip() == self.mu
  }

  pub fn is_cocommutative(&self) -> bool {
    &self.flip() * &self.delta == self.delta
  }

  pub fn alpha_is_surjective(&self) -> bool {
    rank(self.alpha.matrix()) == self.dim()
  }

  /// Checks every defining identity exactly, reporting the first failing basis tuple of each.
  pub fn validate(&self) -> AxiomReport {
    let (mu, delta, eta, eps, alpha) = (&self.mu, &self.delta, &self.eta, &self.eps, &self.alpha);
    let id = self.id();
    let t = |a: &LinMap, b: &LinMap| a.tensor(b).expect("same base");
    let one = LinMap::identity(self.dim(), 0);
    let mut r = AxiomReport::new();

    r.push_identity("hom_associativity", &(mu * &t(alpha, mu)), &(mu * &t(mu, alpha)));
    r.push_identity("left_unit", &(mu * &t(eta, &id)), alpha);
    r.push_identity("right_unit", &(mu * &t(&id, eta)), alpha);
    r.push_identity("hom_coassociativity", &(&t(delta, alpha) * delta), &(&t(alpha, delta) * delta));
    r.push_identity("left_counit", &(&t(eps, &id) * delta), alpha);
    r.push_identity("right_counit", &(&t(&id, eps) * delta), alpha);

    let tau23 = flip_operator(self.dim(), 4, 2, 3).expect("valid flip range");
    let mu2 = mu.tensor_power(2);
    r.push_identity("compatibility", &(delta * mu), &(&(&mu2 * &tau23) * &delta.tensor_power(2)));
    r.push_identity("counit_multiplicative", &(eps * mu), &eps.tensor_power(2));
    r.push_identity("coproduct_of_unit", &(delta * eta), &eta.tensor_power(2));
    r.push_identity("counit_of_unit", &(eps * eta), &one);

    r.push_identity("alpha_multiplicative", &(alpha * mu), &(mu * &alpha.tensor_power(2)));
    r.push_identity("alpha_comultiplicative", &(delta * alpha), &(&alpha.tensor_power(2) * delta));
    r.push_identity("alpha_unit", &(alpha * eta), eta);
    r.push_identity("counit_alpha", &(eps * alpha), eps);
    r
  }
}
