//! Human-readable and JSON renderings of maps and reports. All numbers are exact rationals.

use hombi_core::cohomology::CochainVector;
use hombi_core::linalg::{format_scalar, zero, LinMap, Scalar};
use hombi_core::structures::{basis_digits, AxiomReport};
use serde_json::{json, Value};

use crate::io::map_to_entries;

fn tensor_label(slots: &[usize], labels: &[String]) -> String {
  if slots.is_empty() {
    return "1".into();
  }
  slots.iter().map(|&i| labels[i].as_str()).collect::<Vec<_>>().join("⊗")
}

/// `2 e1 - 1/2 e3⊗e4 + e2`, or `0`.
pub fn format_vector(coeffs: &[Scalar], arity: usize, labels: &[String]) -> String {
  let d = labels.len();
  let z = zero();
  let one = hombi_core::linalg::one();
  let mut out = String::new();
  for (idx, x) in coeffs.iter().enumerate() {
    if *x == z {
      continue;
    }
    let negative = *x < z;
    let mag = if negative { -x.clone() } else { x.clone() };
    let sign = match (out.is_empty(), negative) {
      (true, true) => "-",
      (true, false) => "",
      (false, true) => " - ",
      (false, false) => " + ",
    };
    let basis = tensor_label(&basis_digits(idx, d, arity), labels);
    let term = match (mag == one, arity == 0) {
      (_, true) => format_scalar(&mag),
      (true, false) => basis,
      (false, false) => format!("{} {basis}", format_scalar(&mag)),
    };
    out.push_str(sign);
    out.push_str(&term);
  }
  if out.is_empty() {
    out.push('0');
  }
  out
}

/// One line `name(input) = output` per basis input with a nonzero image.
pub fn format_map(name: &str, f: &LinMap, labels: &[String]) -> Vec<String> {
  let d = f.base_dim();
  let m = f.matrix();
  (0..m.cols())
    .filter_map(|col| {
      let image = m.column(col);
      if image.iter().all(|x| *x == zero()) {
        return None;
      }
      let input = tensor_label(&basis_digits(col, d, f.dom_arity()), labels);
      Some(format!("{name}({input}) = {}", format_vector(&image, f.cod_arity(), labels)))
    })
    .collect()
}

pub fn map_json(f: &LinMap) -> Value {
  json!({ "cod_arity": f.cod_arity(), "dom_arity": f.dom_arity(), "entries": map_to_entries(f) })
}

pub fn report_text(r: &AxiomReport) -> String {
  let failures = r.failures().count();
  let summary =
    if failures == 0 { "all checks pass".to_string() } else { format!("{failures} check(s) fail") };
  format!("{r}{summary}")
}

pub fn report_json(r: &AxiomReport) -> Value {
  let checks: Vec<Value> = r
    .checks
    .iter()
    .map(|c| {
      let witness = c.witness.as_ref().map(|w| {
        json!({
          "input": w.input,
          "output": w.output,
          "lhs": format_scalar(&w.lhs),
          "rhs": format_scalar(&w.rhs),
        })
      });
      json!({ "name": c.name, "passed": c.passed, "witness": witness })
    })
    .collect();
  json!({ "passed": r.all_pass(), "checks": checks })
}

pub fn cochain_text(v: &CochainVector, labels: &[String]) -> Vec<String> {
  let mut out = Vec::new();
  for c in &v.components {
    if c.map.is_zero() {
      continue;
    }
    out.extend(format_map(&format!("c{},{}", c.p, c.q), &c.map, labels));
  }
  if out.is_empty() {
    out.push("0".into());
  }
  out
}

pub fn cochain_json(v: &CochainVector) -> Value {
  let comps: Vec<Value> =
    v.components.iter().map(|c| json!({ "p": c.p, "q": c.q, "entries": map_to_entries(&c.map) })).collect();
  json!({ "degree": v.n, "components": comps })
}

#[cfg(test)]
mod tests {
  use super::*;
  use hombi_core::linalg::{int, ratio};
  use hombi_core::structures::build_taft;

  fn labels() -> Vec<String> {
    ["e1", "e2", "e3", "e4"].map(String::from).to_vec()
  }

  #[test]
  fn vectors_render_with_signs() {
    let v = vec![int(1), int(-2), int(0), ratio(1, 2)];
    assert_eq!(format_vector(&v, 1, &labels()), "e1 - 2 e2 + 1/2 e4");
    assert_eq!(format_vector(&vec![int(0); 4], 1, &labels()), "0");
    assert_eq!(format_vector(&[int(-1), int(0), int(0), int(0)], 1, &labels()), "-e1");
  }

  #[test]
  fn maps_render_per_input() {
    let b = build_taft(&int(2));
    let lines = format_map("mu", b.mu(), b.labels());
    assert!(lines.contains(&"mu(e2⊗e3) = 2 e4".to_string()), "{lines:?}");
    let lines = format_map("eps", b.eps(), b.labels());
    assert_eq!(lines, vec!["eps(e1) = 1", "eps(e2) = 1"]);
  }
}
