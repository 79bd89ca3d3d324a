//! The α-twisted Gerstenhaber–Schack bicomplex of a Hom-bialgebra.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num_traits::{One, Zero};

use super::{Cochain, CohomologyError};
use crate::actions::{left_action_power, left_coaction_power, right_action_power, right_coaction_power};
use crate::linalg::{kernel_with_free_columns, LinMap, Matrix, Scalar, SubspaceBasis};
use crate::structures::HomBialgebra;

/// `(−1)^k`.
pub(crate) fn sign(k: usize) -> Scalar {
  if k.is_multiple_of(2) {
    Scalar::one()
  } else {
    -Scalar::one()
  }
}

/// Basis of the α-commuting maps `B^⊗q → B^⊗p`.
#[derive(Clone, Debug)]
pub struct CochainSpace {
  pub p: usize,
  pub q: usize,
  basis: SubspaceBasis,
  free: Vec<usize>,
}

impl CochainSpace {
  pub fn dim(&self) -> usize {
    self.basis.dim()
  }

  pub fn basis(&self) -> &SubspaceBasis {
    &self.basis
  }

  fn rows(&self, d: usize) -> usize {
    d.pow(self.p as u32)
  }

  fn cols(&self, d: usize) -> usize {
    d.pow(self.q as u32)
  }

  /// The `k`-th basis cochain as a map.
  pub fn element(&self, d: usize, k: usize) -> Cochain {
    let m = Matrix::from_vec(self.rows(d), self.cols(d), self.basis.vectors()[k].clone())
      .expect("basis vectors have the cochain size");
    Cochain::new(self.p, self.q, LinMap::new(d, self.p, self.q, m).expect("cochain shape"))
  }

  /// `Σ c_k b_k` as a map.
  pub fn combine(&self, d: usize, coords: &[Scalar]) -> Cochain {
    let mut v = vec![Scalar::zero(); self.basis.ambient_dim()];
    for (c, b) in coords.iter().zip(self.basis.vectors()) {
      if c.is_zero() {
        continue;
      }
      for (x, y) in v.iter_mut().zip(b) {
        if !y.is_zero() {
          *x += c * y;
        }
      }
    }
    let m = Matrix::from_vec(self.rows(d), self.cols(d), v).expect("cochain size");
    Cochain::new(self.p, self.q, LinMap::new(d, self.p, self.q, m).expect("cochain shape"))
  }

  /// Coordinates of an element already known to lie in this space: its entries at the free
  /// columns of the commutation constraint.
  fn read_coordinates(&self, f: &LinMap) -> Vec<Scalar> {
    let data = f.matrix().as_slice();
    self.free.iter().map(|&i| data[i].clone()).collect()
  }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Key {
  AlphaPower(usize),
  AlphaTensor(usize),
  LambdaL(usize),
  LambdaR(usize),
  RhoL(usize),
  RhoR(usize),
  MuInsert(usize, usize),
  DeltaInsert(usize, usize),
}

/// Cached building blocks for the coboundary maps of one Hom-bialgebra.
///
/// Not `Sync`; build one per thread.
pub struct Bicomplex {
  b: HomBialgebra,
  maps: RefCell<HashMap<Key, Rc<LinMap>>>,
  spaces: RefCell<HashMap<(usize, usize), Rc<CochainSpace>>>,
}

impl Bicomplex {
  pub fn new(b: &HomBialgebra) -> Self {
    Self { b: b.clone(), maps: RefCell::default(), spaces: RefCell::default() }
  }

  pub fn bialgebra(&self) -> &HomBialgebra {
    &self.b
  }

  pub fn dim(&self) -> usize {
    self.b.dim()
  }

  fn cached(
    &self,
    key: Key,
    build: impl FnOnce() -> Result<LinMap, CohomologyError>,
  ) -> Result<Rc<LinMap>, CohomologyError> {
    if let Some(m) = self.maps.borrow().get(&key) {
      return Ok(Rc::clone(m));
    }
    let m = Rc::new(build()?);
    self.maps.borrow_mut().insert(key, Rc::clone(&m));
    Ok(m)
  }

  /// `α^k` (composition power).
  pub fn alpha_power(&self, k: usize) -> Result<Rc<LinMap>, CohomologyError> {
    self.cached(Key::AlphaPower(k), || Ok(self.b.alpha().power(k)?))
  }

  /// `α^{⊗k}`.
  pub fn alpha_tensor(&self, k: usize) -> Result<Rc<LinMap>, CohomologyError> {
    self.cached(Key::AlphaTensor(k), || Ok(self.b.alpha().tensor_power(k)))
  }

  fn lambda_l(&self, n: usize) -> Result<Rc<LinMap>, CohomologyError> {
    self.cached(Key::LambdaL(n), || Ok(left_action_power(&self.b, n)?.map))
  }

  fn lambda_r(&self, n: usize) -> Result<Rc<LinMap>, CohomologyError> {
    self.cached(Key::LambdaR(n), || Ok(right_action_power(&self.b, n)?.map))
  }

  fn rho_l(&self, n: usize) -> Result<Rc<LinMap>, CohomologyError> {
    self.cached(Key::RhoL(n), || Ok(left_coaction_power(&self.b, n)?.map))
  }

  fn rho_r(&self, n: usize) -> Result<Rc<LinMap>, CohomologyError> {
    self.cached(Key::RhoR(n), || Ok(right_coaction_power(&self.b, n)?.map))
  }

  /// `α^{⊗(i−1)}⊗μ⊗α^{⊗(q−i)} : B^⊗(q+1) → B^⊗q`, for `1 ≤ i ≤ q`.
  fn mu_insert(&self, q: usize, i: usize) -> Result<Rc<LinMap>, CohomologyError> {
    self.cached(Key::MuInsert(q, i), || {
      let left = self.alpha_tensor(i - 1)?;
      let right = self.alpha_tensor(q - i)?;
      Ok(left.tensor(self.b.mu())?.tensor(&right)?)
    })
  }

  /// `α^{⊗(j−1)}⊗Δ⊗α^{⊗(p−j)} : B^⊗p → B^⊗(p+1)`, for `1 ≤ j ≤ p`.
  fn delta_insert(&self, p: usize, j: usize) -> Result<Rc<LinMap>, CohomologyError> {
    self.cached(Key::DeltaInsert(p, j), || {
      let left = self.alpha_tensor(j - 1)?;
      let right = self.alpha_tensor(p - j)?;
      Ok(left.tensor(self.b.delta())?.tensor(&right)?)
    })
  }

  fn bidegree(&self, f: &LinMap) -> Result<(usize, usize), CohomologyError> {
    let (p, q) = (f.cod_arity(), f.dom_arity());
    if f.base_dim() != self.dim() || p == 0 || q == 0 {
      return Err(CohomologyError::Degree(format!(
        "cochain must map B^⊗q → B^⊗p with p, q >= 1 over dimension {}; got {}x{}",
        self.dim(),
        f.matrix().rows(),
        f.matrix().cols()
      )));
    }
    Ok((p, q))
  }

  /// The commutation constraint `F ↦ F·α^{⊗q} − α^{⊗p}·F` on row-major vectorized `F`.
  fn commutation_operator(&self, p: usize, q: usize) -> Result<Matrix, CohomologyError> {
    let a = self.alpha_tensor(q)?;
    let bm = self.alpha_tensor(p)?;
    let (a, bm) = (a.matrix(), bm.matrix());
    let (rows, cols) = (bm.rows(), a.rows());
    let mut k = Matrix::zeros(rows * cols, rows * cols);
    for r in 0..rows {
      for c in 0..cols {
        let eq = r * cols + c;
        // (F·A)[r][c] = Σ_k F[r][k]·A[k][c]
        for kk in 0..cols {
          let x = a.get(kk, c);
          if !x.is_zero() {
            *k.entry_mut(eq, r * cols + kk) += x;
          }
        }
        // (B·F)[r][c] = Σ_k B[r][k]·F[k][c]
        for kk in 0..rows {
          let x = bm.get(r, kk);
          if !x.is_zero() {
            *k.entry_mut(eq, kk * cols + c) -= x;
          }
        }
      }
    }
    Ok(k)
  }

  /// The α-commuting cochains `C^{p,q}`.
  pub fn space(&self, p: usize, q: usize) -> Result<Rc<CochainSpace>, CohomologyError> {
    if p == 0 || q == 0 {
      return Err(CohomologyError::Degree(format!("bidegree ({p}, {q}) needs p, q >= 1")));
    }
    if let Some(s) = self.spaces.borrow().get(&(p, q)) {
      return Ok(Rc::clone(s));
    }
    let (basis, free) = kernel_with_free_columns(&self.commutation_operator(p, q)?);
    let s = Rc::new(CochainSpace { p, q, basis, free });
    self.spaces.borrow_mut().insert((p, q), Rc::clone(&s));
    Ok(s)
  }

  pub fn is_alpha_commuting(&self, f: &LinMap) -> Result<bool, CohomologyError> {
    let (p, q) = self.bidegree(f)?;
    Ok(f.compose(&*self.alpha_tensor(q)?)? == self.alpha_tensor(p)?.compose(f)?)
  }

  /// Coordinates of `f` in the basis of `C^{p,q}`; fails if `f` does not commute with α.
  pub fn coordinates(&self, f: &LinMap) -> Result<Vec<Scalar>, CohomologyError> {
    let (p, q) = self.bidegree(f)?;
    if !self.is_alpha_commuting(f)? {
      return Err(CohomologyError::NotCommuting { p, q });
    }
    Ok(self.space(p, q)?.read_coordinates(f))
  }

  /// `δ_H f = λ_l^p(α^{q−1}⊗f) + Σ_{i=1}^{q} (−1)^i f(α^{⊗(i−1)}⊗μ⊗α^{⊗(q−i)})
  ///   + (−1)^{q+1} λ_r^p(f⊗α^{q−1})`, landing in bidegree `(p, q+1)`.
  pub fn delta_h(&self, f: &LinMap) -> Result<LinMap, CohomologyError> {
    let (p, q) = self.bidegree(f)?;
    let a = self.alpha_power(q - 1)?;
    let mut out = self.lambda_l(p)?.compose(&a.tensor(f)?)?;
    for i in 1..=q {
      out = out.checked_add(&f.compose(&*self.mu_insert(q, i)?)?.scale(&sign(i)))?;
    }
    let tail = self.lambda_r(p)?.compose(&f.tensor(&a)?)?;
    Ok(out.checked_add(&tail.scale(&sign(q + 1)))?)
  }

  /// `δ_C f = (α^{p−1}⊗f)ρ_l^q + Σ_{j=1}^{p} (−1)^j (α^{⊗(j−1)}⊗Δ⊗α^{⊗(p−j)})f
  ///   + (−1)^{p+1} (f⊗α^{p−1})ρ_r^q`, landing in bidegree `(p+1, q)`.
  pub fn delta_c(&self, f: &LinMap) -> Result<LinMap, CohomologyError> {
    let (p, q) = self.bidegree(f)?;
    let a = self.alpha_power(p - 1)?;
    let mut out = a.tensor(f)?.compose(&*self.rho_l(q)?)?;
    for j in 1..=p {
      out = out.checked_add(&self.delta_insert(p, j)?.compose(f)?.scale(&sign(j)))?;
    }
    let tail = f.tensor(&a)?.compose(&*self.rho_r(q)?)?;
    Ok(out.checked_add(&tail.scale(&sign(p + 1)))?)
  }

  /// Face operator `D_i` on `C^{p,q}`, `0 ≤ i ≤ q−1`:
  /// `D_0 = −λ_l^p(α^{q−1}⊗f) + f(μ⊗α^{⊗(q−1)})`, `D_i = f(α^{⊗i}⊗μ⊗α^{⊗(q−i−1)})` and
  /// `D_{q−1} = f(α^{⊗(q−1)}⊗μ) − λ_r^p(f⊗α^{q−1})`. For `q = 1` the two ends merge.
  pub fn face_d(&self, i: usize, f: &LinMap) -> Result<LinMap, CohomologyError> {
    let (p, q) = self.bidegree(f)?;
    if i >= q {
      return Err(CohomologyError::Degree(format!("face index {i} out of range 0..{q}")));
    }
    let a = self.alpha_power(q - 1)?;
    let mut out = f.compose(&*self.mu_insert(q, i + 1)?)?;
    if i == 0 {
      out = &out - &self.lambda_l(p)?.compose(&a.tensor(f)?)?;
    }
    if i == q - 1 {
      out = &out - &self.lambda_r(p)?.compose(&f.tensor(&a)?)?;
    }
    Ok(out)
  }

  /// Face operator `S_i` on `C^{p,q}`, `0 ≤ i ≤ p−1`, the mirror of [`Bicomplex::face_d`].
  pub fn face_s(&self, i: usize, f: &LinMap) -> Result<LinMap, CohomologyError> {
    let (p, q) = self.bidegree(f)?;
    if i >= p {
      return Err(CohomologyError::Degree(format!("face index {i} out of range 0..{p}")));
    }
    let a = self.alpha_power(p - 1)?;
    let mut out = self.delta_insert(p, i + 1)?.compose(f)?;
    if i == 0 {
      out = &out - &a.tensor(f)?.compose(&*self.rho_l(q)?)?;
    }
    if i == p - 1 {
      out = &out - &f.tensor(&a)?.compose(&*self.rho_r(q)?)?;
    }
    Ok(out)
  }

  /// Matrix of a linear operation on all maps `B^⊗q → B^⊗p`, acting on row-major vectorized
  /// maps, assembled from the images of the elementary matrices.
  pub fn vectorize(
    &self,
    p: usize,
    q: usize,
    op: impl Fn(&LinMap) -> Result<LinMap, CohomologyError>,
  ) -> Result<Matrix, CohomologyError> {
    let d = self.dim();
    let (rows, cols) = (d.pow(p as u32), d.pow(q as u32));
    let mut columns = Vec::with_capacity(rows * cols);
    for idx in 0..rows * cols {
      let mut e = Matrix::zeros(rows, cols);
      e.set(idx / cols, idx % cols, Scalar::one());
      columns.push(op(&LinMap::new(d, p, q, e)?)?.into_matrix().into_vec());
    }
    let height = columns.first().map_or(0, Vec::len);
    Ok(Matrix::from_columns(height, &columns)?)
  }
}
