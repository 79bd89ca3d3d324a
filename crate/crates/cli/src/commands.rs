//! Command implementations. Each returns text and JSON renderings and an exit status, so the
//! binary only parses arguments and prints.

use std::path::Path;

use hombi_core::cohomology::{Bicomplex, CohomologyError};
use hombi_core::convolution::{antipode_properties, antipode_solve};
use hombi_core::deformations::{
  apply_gauge, check_unit_counit, normalize_unit, obstruction, residuals, twist_deformation,
  DeformationError, TruncatedDeformation,
};
use hombi_core::linalg::LinMap;
use hombi_core::structures::{dual, tensor_product, yau_twist, HomBialgebra};
use serde_json::{json, Value};
use thiserror::Error;

use crate::io::{
  self, bialgebra_to_file, deformation_to_file, gauge_to_file, to_pretty, write_json, InputError,
};
use crate::render::{cochain_json, cochain_text, format_map, map_json, report_json, report_text};

/// Exit status 0: the computation ran and every checked property held.
pub const EXIT_OK: i32 = 0;
/// Exit status 1: the computation ran and found a mathematical failure.
pub const EXIT_FAILURE: i32 = 1;
/// Exit status 2: the input could not be read or is malformed.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
  #[error(transparent)]
  Input(#[from] InputError),
  #[error("{0}")]
  Math(String),
}

impl CliError {
  pub fn exit_code(&self) -> i32 {
    match self {
      CliError::Input(_) => EXIT_INPUT,
      CliError::Math(_) => EXIT_FAILURE,
    }
  }
}

fn input(msg: impl Into<String>) -> CliError {
  CliError::Input(InputError::Schema(msg.into()))
}

fn from_deformation(e: DeformationError) -> CliError {
  match e {
    DeformationError::Invalid(_)
    | DeformationError::NotSurjective
    | DeformationError::TwistOrder(_)
    | DeformationError::Cohomology(CohomologyError::Containment { .. }) => CliError::Math(e.to_string()),
    other => input(other.to_string()),
  }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
  pub code: i32,
  pub text: String,
  pub json: Value,
}

impl Outcome {
  fn new(ok: bool, text: String, json: Value) -> Self {
    Self { code: if ok { EXIT_OK } else { EXIT_FAILURE }, text, json }
  }
}

pub fn validate(b: &HomBialgebra) -> Outcome {
  let r = b.validate();
  Outcome::new(r.all_pass(), report_text(&r), report_json(&r))
}

pub fn cohomology(b: &HomBialgebra, n: usize, representatives: bool) -> Result<Outcome, CliError> {
  if n == 0 {
    return Err(input("the degree must be at least 1"));
  }
  let bc = Bicomplex::new(b);
  let r = match bc.cohomology(n) {
    Ok(r) => r,
    Err(e @ CohomologyError::Containment { .. }) => {
      return Err(CliError::Math(format!(
        "{e}; the total differential does not square to zero in degree {n}"
      )))
    }
    Err(e) => return Err(input(e.to_string())),
  };
  let mut text = format!(
    "dim C^{n} = {} (alpha-commuting)\ndim Z^{n} = {}, dim B^{n} = {}, dim H^{n} = {}",
    r.dim_ambient, r.dim_z, r.dim_b, r.dim_h
  );
  let mut j = json!({
    "n": n,
    "dim_ambient": r.dim_ambient,
    "dim_z": r.dim_z,
    "dim_b": r.dim_b,
    "dim_h": r.dim_h,
  });
  if representatives {
    for (i, v) in r.representatives.iter().enumerate() {
      text.push_str(&format!("\nrepresentative {}:", i + 1));
      for line in cochain_text(v, b.labels()) {
        text.push_str(&format!("\n  {line}"));
      }
    }
    j["representatives"] = r.representatives.iter().map(cochain_json).collect();
  }
  Ok(Outcome::new(true, text, j))
}

fn residual_block(name: &str, m: &LinMap, labels: &[String], text: &mut String) {
  if m.is_zero() {
    return;
  }
  for line in format_map(name, m, labels) {
    text.push_str(&format!("\n    {line}"));
  }
}

pub fn deform_residuals(def: &TruncatedDeformation) -> Result<Outcome, CliError> {
  let r = residuals(def).map_err(from_deformation)?;
  let labels = def.base().labels();
  let mut text = String::new();
  let mut orders = Vec::new();
  for o in &r.orders {
    let status = |ok: bool| if ok { "ok" } else { "nonzero" };
    if !text.is_empty() {
      text.push('\n');
    }
    text.push_str(&format!(
      "order {}: assoc {}, coassoc {}, compat {}",
      o.order,
      status(o.assoc_vanishes()),
      status(o.coassoc_vanishes()),
      status(o.compat_vanishes())
    ));
    residual_block("assoc", &o.assoc, labels, &mut text);
    residual_block("coassoc", &o.coassoc, labels, &mut text);
    residual_block("compat", &o.compat, labels, &mut text);
    orders.push(json!({
      "order": o.order,
      "passed": o.vanishes(),
      "assoc": map_json(&o.assoc),
      "coassoc": map_json(&o.coassoc),
      "compat": map_json(&o.compat),
    }));
  }
  let ok = r.all_vanish();
  text.push_str(if ok { "\nvalid to every order" } else { "\nthe deformation equations fail" });
  Ok(Outcome::new(ok, text, json!({ "valid": ok, "orders": orders })))
}

pub fn deform_obstruction(
  def: &TruncatedDeformation,
  s: usize,
  out: Option<&Path>,
) -> Result<Outcome, CliError> {
  let ob = obstruction(def, s).map_err(from_deformation)?;
  let bc = Bicomplex::new(def.base());
  let cocycle = bc.is_cocycle(&ob.class).map_err(|e| input(e.to_string()))?;
  let labels = def.base().labels();
  let mut text = format!(
    "order {s} obstruction: {}\ncocycle: {}\nextension: {}",
    if ob.class.is_zero() { "zero" } else { "nonzero" },
    if cocycle { "yes" } else { "no" },
    if ob.extension.is_some() { "found" } else { "none" }
  );
  if !ob.class.is_zero() {
    text.push_str("\nclass:");
    for line in cochain_text(&ob.class, labels) {
      text.push_str(&format!("\n  {line}"));
    }
  }
  let mut j = json!({
    "order": s,
    "class": cochain_json(&ob.class),
    "cocycle": cocycle,
    "extendable": ob.extension.is_some(),
  });
  if let Some((mu, delta)) = &ob.extension {
    text.push_str(&format!("\nmu_{s}:"));
    for line in format_map("mu", mu, labels) {
      text.push_str(&format!("\n  {line}"));
    }
    text.push_str(&format!("\ndelta_{s}:"));
    for line in format_map("delta", delta, labels) {
      text.push_str(&format!("\n  {line}"));
    }
    j["extension"] = json!({ "mu": map_json(mu), "delta": map_json(delta) });
    if let Some(path) = out {
      let extended = def.truncated(s - 1).extended(mu.clone(), delta.clone()).map_err(from_deformation)?;
      write_json(path, &deformation_to_file(&extended))?;
      text.push_str(&format!("\nwrote {}", path.display()));
    }
  }
  Ok(Outcome::new(ob.extension.is_some(), text, j))
}

fn deformation_output(
  def: &TruncatedDeformation,
  out: Option<&Path>,
  note: String,
) -> Result<Outcome, CliError> {
  let file = deformation_to_file(def);
  let valid = residuals(def).map_err(from_deformation)?.all_vanish();
  let mut text = format!("{note}\nresiduals vanish: {}", if valid { "yes" } else { "no" });
  match out {
    Some(path) => {
      write_json(path, &file)?;
      text.push_str(&format!("\nwrote {}", path.display()));
    }
    None => text.push_str(&format!("\n{}", to_pretty(&file))),
  }
  let j =
    json!({ "valid": valid, "deformation": serde_json::to_value(&file).expect("file types serialize") });
  Ok(Outcome::new(true, text, j))
}

pub fn deform_gauge(
  def: &TruncatedDeformation,
  phi_path: &Path,
  out: Option<&Path>,
) -> Result<Outcome, CliError> {
  let phi = io::load_gauge(phi_path, def.base().dim())?;
  let gauged = apply_gauge(def, &phi).map_err(from_deformation)?;
  deformation_output(&gauged, out, format!("gauged by {}", phi_path.display()))
}

pub fn deform_twist(
  def: &TruncatedDeformation,
  beta_path: &Path,
  out: Option<&Path>,
) -> Result<Outcome, CliError> {
  let beta = io::load_map(beta_path, def.base().dim())?;
  let twisted = twist_deformation(def, &beta).map_err(|e| match e {
    DeformationError::Structure(s) => CliError::Math(s.to_string()),
    other => from_deformation(other),
  })?;
  deformation_output(&twisted, out, format!("twisted by {}", beta_path.display()))
}

pub fn deform_normalize(
  def: &TruncatedDeformation,
  out: Option<&Path>,
  gauge_out: Option<&Path>,
) -> Result<Outcome, CliError> {
  let (normalized, gauge) = normalize_unit(def).map_err(from_deformation)?;
  let checks = check_unit_counit(&normalized).map_err(from_deformation)?;
  let ok = checks.iter().all(|c| c.passed());
  let mut text = String::new();
  for c in &checks {
    text.push_str(&format!(
      "order {}: unit and counit {}\n",
      c.order,
      if c.passed() { "preserved" } else { "NOT preserved" }
    ));
  }
  let (dfile, gfile) = (deformation_to_file(&normalized), gauge_to_file(&gauge));
  match out {
    Some(path) => {
      write_json(path, &dfile)?;
      text.push_str(&format!("wrote {}\n", path.display()));
    }
    None => text.push_str(&format!("deformation:\n{}\n", to_pretty(&dfile))),
  }
  match gauge_out {
    Some(path) => {
      write_json(path, &gfile)?;
      text.push_str(&format!("wrote {}", path.display()));
    }
    None => text.push_str(&format!("gauge:\n{}", to_pretty(&gfile))),
  }
  let j = json!({
    "unital": ok,
    "deformation": serde_json::to_value(&dfile).expect("file types serialize"),
    "gauge": serde_json::to_value(&gfile).expect("file types serialize"),
  });
  Ok(Outcome::new(ok, text.trim_end().to_string(), j))
}

pub fn antipode(b: &HomBialgebra) -> Result<Outcome, CliError> {
  let sol = antipode_solve(b).map_err(|e| input(e.to_string()))?;
  let Some(sol) = sol else {
    return Ok(Outcome::new(true, "no antipode".into(), json!({ "exists": false })));
  };
  let props = antipode_properties(b, &sol.map).map_err(|e| input(e.to_string()))?;
  let mut text = format_map("S", &sol.map, b.labels()).join("\n");
  if text.is_empty() {
    text.push_str("S = 0");
  }
  if sol.is_unique() {
    text.push_str("\nunique");
  } else {
    text.push_str(&format!("\nnot unique: the solutions form an affine space of dimension {}", sol.free_dim));
  }
  text.push('\n');
  text.push_str(&report_text(&props));
  let j = json!({
    "exists": true,
    "unique": sol.is_unique(),
    "free_dim": sol.free_dim,
    "map": io::map_to_entries(&sol.map),
    "properties": report_json(&props),
  });
  Ok(Outcome::new(true, text, j))
}

fn bialgebra_output(b: &HomBialgebra, out: Option<&Path>) -> Result<Outcome, CliError> {
  let file = bialgebra_to_file(b);
  let text = match out {
    Some(path) => {
      write_json(path, &file)?;
      format!("wrote {}", path.display())
    }
    None => to_pretty(&file),
  };
  Ok(Outcome::new(true, text, serde_json::to_value(&file).expect("file types serialize")))
}

pub fn twist(b: &HomBialgebra, beta_path: &Path, out: Option<&Path>) -> Result<Outcome, CliError> {
  let beta = io::load_map(beta_path, b.dim())?;
  let t = yau_twist(b, &beta).map_err(|e| CliError::Math(e.to_string()))?;
  bialgebra_output(&t, out)
}

pub fn dual_of(b: &HomBialgebra, out: Option<&Path>) -> Result<Outcome, CliError> {
  bialgebra_output(&dual(b), out)
}

pub fn tensor(left: &HomBialgebra, right: &HomBialgebra, out: Option<&Path>) -> Result<Outcome, CliError> {
  bialgebra_output(&tensor_product(left, right), out)
}

#[cfg(test)]
mod tests {
  use super::*;
  use hombi_core::linalg::int;
  use hombi_core::structures::{build_group_algebra, build_taft};

  #[test]
  fn cohomology_lines() {
    let o = cohomology(&build_taft(&int(2)), 1, true).unwrap();
    assert!(o.text.contains("dim H^1 = 1"), "{}", o.text);
    assert_eq!(o.json["dim_h"], 1);
    assert_eq!(o.json["representatives"].as_array().unwrap().len(), 1);
  }

  #[test]
  fn containment_failure_is_mathematical() {
    let e = cohomology(&build_taft(&int(2)), 3, false).unwrap_err();
    assert_eq!(e.exit_code(), EXIT_FAILURE);
    assert_eq!(cohomology(&build_taft(&int(2)), 0, false).unwrap_err().exit_code(), EXIT_INPUT);
  }

  #[test]
  fn antipode_of_z2() {
    let o = antipode(&build_group_algebra(2, 1).unwrap()).unwrap();
    assert!(o.text.contains("S(e1) = e1"), "{}", o.text);
    assert_eq!(o.code, EXIT_OK);
  }
}
