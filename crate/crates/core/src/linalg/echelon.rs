//! Fraction-free row reduction.
//!
//! Rows are cleared of denominators up front and kept primitive (content 1) after every
//! update, so all elimination runs on integers. Only rows with a nonzero entry in the
//! pivot column are touched, and only the nonzero positions of the pivot row are read.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::scalar::Scalar;
use super::Matrix;

type IntRow = Vec<BigInt>;

/// Scales a rational row to a primitive integer row with the same span.
pub(crate) fn integerize(row: &[Scalar]) -> IntRow {
  let lcm = row.iter().filter(|x| !x.is_zero()).fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
  let mut out: IntRow = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
  make_primitive(&mut out);
  out
}

fn make_primitive(row: &mut IntRow) {
  let mut g = BigInt::zero();
  for x in row.iter().filter(|x| !x.is_zero()) {
    g = g.gcd(x);
    if g.is_one() {
      return;
    }
  }
  if g.is_zero() || g.is_one() {
    return;
  }
  for x in row.iter_mut().filter(|x| !x.is_zero()) {
    *x /= &g;
  }
}

/// `target ← (p/g)·target − (a/g)·pivot_row`, clearing `target[col]`.
fn eliminate(target: &mut IntRow, pivot_row: &IntRow, support: &[usize], col: usize) {
  let a = target[col].clone();
  if a.is_zero() {
    return;
  }
  let p = &pivot_row[col];
  let g = a.gcd(p);
  let scale_target = p / &g;
  let scale_pivot = &a / &g;
  let rescaled = !scale_target.is_one();
  if rescaled {
    for x in target.iter_mut().filter(|x| !x.is_zero()) {
      *x *= &scale_target;
    }
  }
  for &j in support {
    target[j] -= &scale_pivot * &pivot_row[j];
  }
  debug_assert!(target[col].is_zero());
  if rescaled {
    make_primitive(target);
  }
}

fn support(row: &IntRow) -> Vec<usize> {
  row.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i).collect()
}

/// Reduced row echelon form over the integers: each pivot row has a nonzero pivot and zeros
/// in every other pivot column. Pivots are not normalized to one.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
  pub cols: usize,
  pub rows: Vec<IntRow>,
  pub pivots: Vec<usize>,
}

impl Echelon {
  pub fn of(m: &Matrix) -> Self {
    let cols = m.cols();
    let mut rows: Vec<IntRow> =
      (0..m.rows()).map(|r| m.row(r)).filter(|r| r.iter().any(|x| !x.is_zero())).map(integerize).collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
      if rank == rows.len() {
        break;
      }
      let Some(best) = (rank..rows.len())
        .filter(|&i| !rows[i][col].is_zero())
        .min_by(|&a, &b| rows[a][col].magnitude().cmp(rows[b][col].magnitude()))
      else {
        continue;
      };
      rows.swap(rank, best);
      let (head, tail) = rows.split_at_mut(rank + 1);
      let pivot_row = &head[rank];
      let sup = support(pivot_row);
      for row in tail.iter_mut() {
        eliminate(row, pivot_row, &sup, col);
      }
      pivots.push(col);
      rank += 1;
    }
    rows.truncate(rank);
    // Back substitution to clear entries above each pivot.
    for k in (0..rank).rev() {
      let col = pivots[k];
      let (head, tail) = rows.split_at_mut(k);
      let pivot_row = &tail[0];
      let sup = support(pivot_row);
      for row in head.iter_mut() {
        eliminate(row, pivot_row, &sup, col);
      }
    }
    Self { cols, rows, pivots }
  }

  pub fn rank(&self) -> usize {
    self.pivots.len()
  }

  /// Null-space basis: one vector per free column, with a 1 in that column and 0 in every
  /// other free column.
  pub fn kernel(&self) -> Vec<Vec<Scalar>> {
    let mut is_pivot = vec![false; self.cols];
    for &p in &self.pivots {
      is_pivot[p] = true;
    }
    (0..self.cols)
      .filter(|&j| !is_pivot[j])
      .map(|free| {
        let mut v = vec![Scalar::zero(); self.cols];
        v[free] = Scalar::one();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
          if !row[free].is_zero() {
            v[pc] = -Scalar::new(row[free].clone(), row[pc].clone());
          }
        }
        v
      })
      .collect()
  }
}

/// Incrementally maintained echelon basis of a growing span.
#[derive(Clone, Debug)]
pub(crate) struct SpanTracker {
  dim: usize,
  rows: Vec<(IntRow, usize, Vec<usize>)>,
}

impl SpanTracker {
  pub fn new(dim: usize) -> Self {
    Self { dim, rows: Vec::new() }
  }

  pub fn rank(&self) -> usize {
    self.rows.len()
  }

  fn reduce(&self, v: &[Scalar]) -> IntRow {
    debug_assert_eq!(v.len(), self.dim);
    let mut row = integerize(v);
    for (basis_row, pivot, sup) in &self.rows {
      eliminate(&mut row, basis_row, sup, *pivot);
    }
    row
  }

  pub fn contains(&self, v: &[Scalar]) -> bool {
    self.reduce(v).iter().all(Zero::is_zero)
  }

  /// Adds `v` to the span; returns whether the rank grew.
  pub fn insert(&mut self, v: &[Scalar]) -> bool {
    let row = self.reduce(v);
    match row.iter().position(|x| !x.is_zero()) {
      Some(pivot) => {
        let sup = support(&row);
        self.rows.push((row, pivot, sup));
        true
      }
      None => false,
    }
  }
}

#[cfg(test)]
mod tests {
  use super::super::scalar::{int, ratio};
  use super::*;

  #[test]
  fn integerize_clears_denominators() {
    let row = integerize(&[ratio(1, 2), ratio(-1, 3), int(0)]);
    assert_eq!(row, vec![BigInt::from(3), BigInt::from(-2), BigInt::from(0)]);
  }

  #[test]
  fn tracker_membership() {
    let mut t = SpanTracker::new(3);
    assert!(t.insert(&[int(1), int(1), int(0)]));
    assert!(!t.insert(&[int(2), int(2), int(0)]));
    assert!(t.contains(&[ratio(1, 3), ratio(1, 3), int(0)]));
    assert!(!t.contains(&[int(1), int(0), int(0)]));
    assert!(t.insert(&[int(0), int(1), int(0)]));
    assert!(t.contains(&[int(1), int(0), int(0)]));
    assert_eq!(t.rank(), 2);
  }
}
