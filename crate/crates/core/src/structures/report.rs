//! Pass/fail reports for families of matrix identities.

use std::fmt;

use crate::linalg::{format_scalar, LinMap, Scalar};

/// Where an identity `lhs = rhs` first fails: the basis tensor fed in, the output
/// coordinate that differs, and the two values found there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
  pub input: Vec<usize>,
  pub output: Vec<usize>,
  pub lhs: Scalar,
  pub rhs: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
  pub name: String,
  pub passed: bool,
  pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
  pub checks: Vec<AxiomCheck>,
}

/// Base-`d` digits of `index`, most significant first.
pub fn basis_digits(mut index: usize, d: usize, arity: usize) -> Vec<usize> {
  let mut out = vec![0; arity];
  for slot in out.iter_mut().rev() {
    *slot = index % d;
    index /= d;
  }
  out
}

impl AxiomReport {
  pub fn new() -> Self {
    Self::default()
  }

  pub fn all_pass(&self) -> bool {
    self.checks.iter().all(|c| c.passed)
  }

  pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
    self.checks.iter().find(|c| c.name == name)
  }

  pub fn passed(&self, name: &str) -> bool {
    self.get(name).is_some_and(|c| c.passed)
  }

  pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
    self.checks.iter().filter(|c| !c.passed)
  }

  pub fn push_bool(&mut self, name: impl Into<String>, passed: bool) {
    self.checks.push(AxiomCheck { name: name.into(), passed, witness: None });
  }

  /// Records whether `lhs = rhs`, with the first differing entry as witness.
  pub fn push_identity(&mut self, name: impl Into<String>, lhs: &LinMap, rhs: &LinMap) {
    let name = name.into();
    let (l, r) = (lhs.matrix(), rhs.matrix());
    if l.shape() != r.shape() {
      self.checks.push(AxiomCheck { name, passed: false, witness: None });
      return;
    }
    let witness = l.first_difference(r).map(|(row, col)| {
      let d = lhs.base_dim();
      Witness {
        input: basis_digits(col, d, lhs.dom_arity()),
        output: basis_digits(row, d, lhs.cod_arity()),
        lhs: l.get(row, col).clone(),
        rhs: r.get(row, col).clone(),
      }
    });
    self.checks.push(AxiomCheck { name, passed: witness.is_none(), witness });
  }

  pub fn extend(&mut self, other: AxiomReport) {
    self.checks.extend(other.checks);
  }
}

impl fmt::Display for Witness {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let slots = |v: &[usize]| v.iter().map(|i| format!("e{}", i + 1)).collect::<Vec<_>>().join("⊗");
    let input = if self.input.is_empty() { "1".to_string() } else { slots(&self.input) };
    let output = if self.output.is_empty() { "1".to_string() } else { slots(&self.output) };
    write!(
      f,
      "on {input}, coefficient of {output}: {} vs {}",
      format_scalar(&self.lhs),
      format_scalar(&self.rhs)
    )
  }
}

impl fmt::Display for AxiomReport {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for c in &self.checks {
      let status = if c.passed { "pass" } else { "FAIL" };
      match &c.witness {
        Some(w) => writeln!(f, "{status:4} {} ({w})", c.name)?,
        None => writeln!(f, "{status:4} {}", c.name)?,
      }
    }
    Ok(())
  }
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::linalg::{int, LinMap, Matrix};

  #[test]
  fn digits_are_most_significant_first() {
    assert_eq!(basis_digits(6, 4, 2), vec![1, 2]);
    assert_eq!(basis_digits(0, 4, 0), Vec::<usize>::new());
  }

  #[test]
  fn identity_witness_points_at_first_bad_input() {
    let a = LinMap::identity(2, 1);
    let mut m = Matrix::identity(2);
    m.set(0, 1, int(5));
    let b = LinMap::new(2, 1, 1, m).unwrap();
    let mut r = AxiomReport::new();
    r.push_identity("x", &a, &b);
    let w = r.get("x").unwrap().witness.clone().unwrap();
    assert_eq!((w.input, w.output, w.lhs, w.rhs), (vec![1], vec![0], int(0), int(5)));
    assert!(!r.all_pass());
  }
}
