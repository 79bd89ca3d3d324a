//! The total complex and its cohomology.

use super::{sign, Bicomplex, CochainVector, CohomologyError};
use crate::linalg::{
  kernel_basis, quotient_dim, solve_linear, LinalgError, Matrix, Scalar, SpanBuilder, SubspaceBasis,
};

/// Dimensions of `Zⁿ`, `Bⁿ`, `Hⁿ` together with explicit bases.
#[derive(Clone, Debug)]
pub struct CohomologyReport {
  pub n: usize,
  pub dim_ambient: usize,
  pub dim_z: usize,
  pub dim_b: usize,
  pub dim_h: usize,
  pub cocycle_basis: Vec<CochainVector>,
  pub coboundary_basis: Vec<CochainVector>,
  pub representatives: Vec<CochainVector>,
}

impl Bicomplex {
  fn check_degree(&self, n: usize) -> Result<(), CohomologyError> {
    if n == 0 {
      return Err(CohomologyError::Degree("total degree must be at least 1".into()));
    }
    Ok(())
  }

  /// Dimensions of the components of `Ĉⁿ`, by increasing `q`.
  pub fn component_dims(&self, n: usize) -> Result<Vec<usize>, CohomologyError> {
    self.check_degree(n)?;
    (1..=n).map(|q| Ok(self.space(n + 1 - q, q)?.dim())).collect()
  }

  pub fn total_dim(&self, n: usize) -> Result<usize, CohomologyError> {
    Ok(self.component_dims(n)?.iter().sum())
  }

  /// `δ_H ⊕ (−1)^q δ_C` applied componentwise.
  pub fn apply_total(&self, v: &CochainVector) -> Result<CochainVector, CohomologyError> {
    let d = self.dim();
    let n = v.n;
    let mut out = CochainVector::zero(d, n + 1);
    for (k, c) in v.components.iter().enumerate() {
      if c.map.is_zero() {
        continue;
      }
      let h = self.delta_h(&c.map)?;
      let slot = &mut out.components[k + 1].map;
      *slot = slot.checked_add(&h)?;
      let vert = self.delta_c(&c.map)?.scale(&sign(c.q));
      let slot = &mut out.components[k].map;
      *slot = slot.checked_add(&vert)?;
    }
    Ok(out)
  }

  /// Coordinates of `v ∈ Ĉⁿ` in the concatenated component bases.
  pub fn total_coordinates(&self, v: &CochainVector) -> Result<Vec<Scalar>, CohomologyError> {
    let mut out = Vec::new();
    for c in &v.components {
      out.extend(self.coordinates(&c.map)?);
    }
    Ok(out)
  }

  pub fn from_total_coordinates(
    &self,
    n: usize,
    coords: &[Scalar],
  ) -> Result<CochainVector, CohomologyError> {
    let dims = self.component_dims(n)?;
    if coords.len() != dims.iter().sum::<usize>() {
      return Err(LinalgError::Ambient { expected: dims.iter().sum(), found: coords.len() }.into());
    }
    let mut components = Vec::with_capacity(n);
    let mut offset = 0;
    for (k, dim) in dims.into_iter().enumerate() {
      let (p, q) = (n - k, k + 1);
      components.push(self.space(p, q)?.combine(self.dim(), &coords[offset..offset + dim]));
      offset += dim;
    }
    Ok(CochainVector { n, components })
  }

  /// Basis of `Ĉⁿ`: the component bases placed in their slots, in coordinate order.
  pub fn total_basis(&self, n: usize) -> Result<Vec<CochainVector>, CohomologyError> {
    let d = self.dim();
    let mut out = Vec::new();
    for k in 0..n {
      let (p, q) = (n - k, k + 1);
      let space = self.space(p, q)?;
      for idx in 0..space.dim() {
        let mut v = CochainVector::zero(d, n);
        v.components[k] = space.element(d, idx);
        out.push(v);
      }
    }
    Ok(out)
  }

  /// Images of the basis of `Ĉⁿ`, as full vectorized elements of the ambient `Ĉⁿ⁺¹`.
  fn raw_images(&self, n: usize) -> Result<Vec<Vec<Scalar>>, CohomologyError> {
    self.total_basis(n)?.iter().map(|v| Ok(self.apply_total(v)?.flatten())).collect()
  }

  /// `δⁿ` in the coordinates of the α-commuting bases of `Ĉⁿ` and `Ĉⁿ⁺¹`.
  pub fn total_delta(&self, n: usize) -> Result<Matrix, CohomologyError> {
    self.check_degree(n)?;
    let rows = self.total_dim(n + 1)?;
    let columns = self
      .total_basis(n)?
      .iter()
      .map(|v| self.total_coordinates(&self.apply_total(v)?))
      .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_columns(rows, &columns)?)
  }

  pub fn is_cocycle(&self, v: &CochainVector) -> Result<bool, CohomologyError> {
    self.total_coordinates(v)?;
    Ok(self.apply_total(v)?.is_zero())
  }

  /// Some `h ∈ Ĉⁿ⁻¹` with `δh = v`, if one exists. Needs `n ≥ 2`.
  pub fn coboundary_witness(&self, v: &CochainVector) -> Result<Option<CochainVector>, CohomologyError> {
    let target = self.total_coordinates(v)?;
    if v.n < 2 {
      return Err(CohomologyError::Degree("coboundary witnesses exist only in degree >= 2".into()));
    }
    let delta = self.total_delta(v.n - 1)?;
    match solve_linear(&delta, &target)? {
      Some(h) => Ok(Some(self.from_total_coordinates(v.n - 1, &h)?)),
      None => Ok(None),
    }
  }

  /// `Zⁿ`, `Bⁿ` and `Hⁿ = Zⁿ/Bⁿ`. Representatives of `Hⁿ` are the cocycle basis vectors that
  /// raise the rank when added, in order, to the coboundary span.
  pub fn cohomology(&self, n: usize) -> Result<CohomologyReport, CohomologyError> {
    self.check_degree(n)?;
    let dim_ambient = self.total_dim(n)?;
    let raw = self.raw_images(n)?;
    let rows = raw.first().map_or(0, Vec::len);
    let z = if dim_ambient == 0 {
      SubspaceBasis::zero(0)
    } else {
      kernel_basis(&Matrix::from_columns(rows, &raw)?)
    };
    let b = if n >= 2 {
      let delta = self.total_delta(n - 1)?;
      let columns: Vec<Vec<Scalar>> = (0..delta.cols()).map(|c| delta.column(c)).collect();
      SubspaceBasis::spanned_by(dim_ambient, &columns)?
    } else {
      SubspaceBasis::zero(dim_ambient)
    };
    let dim_h = match quotient_dim(&z, &b) {
      Ok(h) => h,
      Err(LinalgError::NotContained { index }) => return Err(CohomologyError::Containment { n, index }),
      Err(e) => return Err(e.into()),
    };
    let mut span = SpanBuilder::new(dim_ambient);
    for v in b.vectors() {
      span.insert(v)?;
    }
    let mut reps = Vec::new();
    for v in z.vectors() {
      if reps.len() == dim_h {
        break;
      }
      if span.insert(v)? {
        reps.push(v.clone());
      }
    }
    let to_vectors = |vs: &[Vec<Scalar>]| -> Result<Vec<CochainVector>, CohomologyError> {
      vs.iter().map(|c| self.from_total_coordinates(n, c)).collect()
    };
    Ok(CohomologyReport {
      n,
      dim_ambient,
      dim_z: z.dim(),
      dim_b: b.dim(),
      dim_h,
      cocycle_basis: to_vectors(z.vectors())?,
      coboundary_basis: to_vectors(b.vectors())?,
      representatives: to_vectors(&reps)?,
    })
  }
}

impl CohomologyReport {
  /// Whether `v` lies in the span of the representatives plus the coboundaries.
  pub fn representatives_span_contains(
    &self,
    bc: &Bicomplex,
    v: &CochainVector,
  ) -> Result<bool, CohomologyError> {
    let target = bc.total_coordinates(v)?;
    let mut span = SpanBuilder::new(self.dim_ambient);
    for w in self.representatives.iter().chain(&self.coboundary_basis) {
      span.insert(&bc.total_coordinates(w)?)?;
    }
    Ok(span.contains(&target)?)
  }
}
