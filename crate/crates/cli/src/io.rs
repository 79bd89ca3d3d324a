//! JSON file formats. Sparse entries list input indices first, then output indices, then the
//! coefficient as an exact `"p/q"` string: `[i, j, k, "p/q"]` in `mu` means `μ(e_i⊗e_j)` has
//! coefficient `p/q` on `e_k`, and in `delta` that `Δ(e_i)` has it on `e_j⊗e_k`.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use hombi_core::deformations::{GaugeTransform, TruncatedDeformation};
use hombi_core::linalg::{format_scalar, parse_scalar, zero, LinMap, Matrix, Scalar};
use hombi_core::structures::{basis_digits, build_group_algebra, build_taft, HomBialgebra};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
  #[error("cannot read {path}: {source}")]
  Read { path: PathBuf, source: std::io::Error },
  #[error("cannot write {path}: {source}")]
  Write { path: PathBuf, source: std::io::Error },
  #[error("{path}: {source}")]
  Json { path: PathBuf, source: serde_json::Error },
  #[error("{0}")]
  Schema(String),
}

fn schema(msg: impl Into<String>) -> InputError {
  InputError::Schema(msg.into())
}

/// One sparse entry, kept as raw JSON until its arity is known.
pub type RawEntry = Vec<Value>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraFile {
  pub dim: usize,
  #[serde(default)]
  pub basis: Vec<String>,
  pub mu: Vec<RawEntry>,
  pub delta: Vec<RawEntry>,
  pub eta: Vec<String>,
  pub eps: Vec<String>,
  pub alpha: Vec<RawEntry>,
}

/// A named builder, `{"builder": "taft", "lambda": "2"}` or `{"builder": "group", "n": 4, "k": 3}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuilderSpec {
  pub builder: String,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub lambda: Option<String>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub n: Option<usize>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  pub k: Option<usize>,
}

/// `base` is a [`BialgebraFile`] or a [`BuilderSpec`]; `mu_terms` and `delta_terms` hold the
/// tables of orders `1..=order`, and may be left empty for a zero tail.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationFile {
  pub base: Value,
  pub order: usize,
  #[serde(default)]
  pub mu_terms: Vec<Vec<RawEntry>>,
  #[serde(default)]
  pub delta_terms: Vec<Vec<RawEntry>>,
}

/// `terms` holds `Φ_1..Φ_order` as `[i, j, "p/q"]` tables.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaugeFile {
  pub order: usize,
  pub terms: Vec<Vec<RawEntry>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
  pub map: Vec<RawEntry>,
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, InputError> {
  let text = fs::read_to_string(path).map_err(|source| InputError::Read { path: path.into(), source })?;
  serde_json::from_str(&text).map_err(|source| InputError::Json { path: path.into(), source })
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), InputError> {
  let text = to_pretty(value);
  fs::write(path, text + "\n").map_err(|source| InputError::Write { path: path.into(), source })
}

/// Pretty JSON with each sparse entry kept on one line.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
  let v = serde_json::to_value(value).expect("file types serialize");
  let mut out = String::new();
  render(&v, 0, &mut out);
  out
}

fn render(v: &Value, indent: usize, out: &mut String) {
  let pad = |n: usize| "  ".repeat(n);
  match v {
    Value::Object(map) if !map.is_empty() => {
      out.push_str("{\n");
      for (i, (k, val)) in map.iter().enumerate() {
        out.push_str(&format!("{}{}: ", pad(indent + 1), Value::String(k.clone())));
        render(val, indent + 1, out);
        out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
      }
      out.push_str(&format!("{}}}", pad(indent)));
    }
    Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
      out.push_str("[\n");
      for (i, item) in items.iter().enumerate() {
        out.push_str(&pad(indent + 1));
        render(item, indent + 1, out);
        out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
      }
      out.push_str(&format!("{}]", pad(indent)));
    }
    other => out.push_str(&other.to_string()),
  }
}

pub fn parse_coefficient(text: &str, what: &str) -> Result<Scalar, InputError> {
  parse_scalar(text).map_err(|_| schema(format!("{what}: \"{text}\" is not an exact rational")))
}

/// A `B^⊗q → B^⊗p` map from entries `[in_1..in_q, out_1..out_p, "p/q"]`. Indices must be
/// below `d` and no index tuple may repeat.
pub fn map_from_entries(
  d: usize,
  p: usize,
  q: usize,
  entries: &[RawEntry],
  what: &str,
) -> Result<LinMap, InputError> {
  let mut m = Matrix::zeros(d.pow(p as u32), d.pow(q as u32));
  let mut seen = BTreeSet::new();
  for (n, entry) in entries.iter().enumerate() {
    if entry.len() != p + q + 1 {
      return Err(schema(format!("{what} entry {n}: expected {} indices and a coefficient", p + q)));
    }
    let mut idx = Vec::with_capacity(p + q);
    for v in &entry[..p + q] {
      let i = v
        .as_u64()
        .map(|i| i as usize)
        .filter(|&i| i < d)
        .ok_or_else(|| schema(format!("{what} entry {n}: index {v} is not in 0..{d}")))?;
      idx.push(i);
    }
    let Some(text) = entry[p + q].as_str() else {
      return Err(schema(format!("{what} entry {n}: the coefficient must be a \"p/q\" string")));
    };
    let x = parse_coefficient(text, &format!("{what} entry {n}"))?;
    if !seen.insert(idx.clone()) {
      return Err(schema(format!("{what} entry {n}: duplicate indices {idx:?}")));
    }
    let col = idx[..q].iter().fold(0, |acc, &i| acc * d + i);
    let row = idx[q..].iter().fold(0, |acc, &i| acc * d + i);
    m.set(row, col, x);
  }
  LinMap::new(d, p, q, m).map_err(|e| schema(format!("{what}: {e}")))
}

/// Nonzero entries of `f`, ordered by input tensor then output tensor.
pub fn map_to_entries(f: &LinMap) -> Vec<RawEntry> {
  let (d, p, q) = (f.base_dim(), f.cod_arity(), f.dom_arity());
  let m = f.matrix();
  let z = zero();
  let mut out = Vec::new();
  for col in 0..m.cols() {
    for row in 0..m.rows() {
      let x = m.get(row, col);
      if *x == z {
        continue;
      }
      let mut entry: RawEntry = basis_digits(col, d, q).into_iter().map(Value::from).collect();
      entry.extend(basis_digits(row, d, p).into_iter().map(Value::from));
      entry.push(Value::String(format_scalar(x)));
      out.push(entry);
    }
  }
  out
}

fn dense_vector(values: &[String], d: usize, what: &str) -> Result<Vec<Scalar>, InputError> {
  if values.len() != d {
    return Err(schema(format!("{what}: expected {d} coefficients, got {}", values.len())));
  }
  values.iter().enumerate().map(|(i, t)| parse_coefficient(t, &format!("{what}[{i}]"))).collect()
}

pub fn bialgebra_from_file(file: &BialgebraFile) -> Result<HomBialgebra, InputError> {
  let d = file.dim;
  if d == 0 {
    return Err(schema("dim must be at least 1"));
  }
  let labels =
    if file.basis.is_empty() { (1..=d).map(|i| format!("e{i}")).collect() } else { file.basis.clone() };
  if labels.len() != d {
    return Err(schema(format!("basis: expected {d} labels, got {}", labels.len())));
  }
  let mu = map_from_entries(d, 1, 2, &file.mu, "mu")?;
  let delta = map_from_entries(d, 2, 1, &file.delta, "delta")?;
  let alpha = map_from_entries(d, 1, 1, &file.alpha, "alpha")?;
  let eta = Matrix::column_vector(dense_vector(&file.eta, d, "eta")?);
  let eps = Matrix::row_vector(dense_vector(&file.eps, d, "eps")?);
  HomBialgebra::from_matrices(labels, mu.into_matrix(), delta.into_matrix(), eta, eps, alpha.into_matrix())
    .map_err(|e| schema(e.to_string()))
}

pub fn bialgebra_to_file(b: &HomBialgebra) -> BialgebraFile {
  BialgebraFile {
    dim: b.dim(),
    basis: b.labels().to_vec(),
    mu: map_to_entries(b.mu()),
    delta: map_to_entries(b.delta()),
    eta: b.unit_vector().iter().map(format_scalar).collect(),
    eps: b.counit_vector().iter().map(format_scalar).collect(),
    alpha: map_to_entries(b.alpha()),
  }
}

pub fn build(spec: &BuilderSpec) -> Result<HomBialgebra, InputError> {
  match spec.builder.as_str() {
    "taft" => {
      let text = spec.lambda.as_deref().ok_or_else(|| schema("the taft builder needs lambda"))?;
      Ok(build_taft(&parse_coefficient(text, "lambda")?))
    }
    "group" => {
      let n = spec.n.ok_or_else(|| schema("the group builder needs n"))?;
      let k = spec.k.unwrap_or(1 % n.max(1));
      build_group_algebra(n, k).map_err(|e| schema(e.to_string()))
    }
    other => Err(schema(format!("unknown builder \"{other}\" (expected taft or group)"))),
  }
}

/// A base given inline, either as a builder or as a full structure table.
pub fn base_from_value(v: &Value) -> Result<HomBialgebra, InputError> {
  let what = |e: serde_json::Error| schema(format!("base: {e}"));
  if v.get("builder").is_some() {
    build(&serde_json::from_value(v.clone()).map_err(what)?)
  } else {
    bialgebra_from_file(&serde_json::from_value(v.clone()).map_err(what)?)
  }
}

pub fn load_bialgebra(path: &Path) -> Result<HomBialgebra, InputError> {
  let v: Value = read_json(path)?;
  base_from_value(&v).map_err(|e| schema(format!("{}: {e}", path.display())))
}

pub fn deformation_from_file(file: &DeformationFile) -> Result<TruncatedDeformation, InputError> {
  let base = base_from_value(&file.base)?;
  let (d, n) = (base.dim(), file.order);
  if n == 0 {
    return Err(schema("order must be at least 1"));
  }
  let tables = |terms: &[Vec<RawEntry>], p: usize, q: usize, what: &str| -> Result<Vec<LinMap>, InputError> {
    match terms.len() {
      0 => Ok((0..n).map(|_| LinMap::zero(d, p, q)).collect()),
      len if len == n => terms
        .iter()
        .enumerate()
        .map(|(i, t)| map_from_entries(d, p, q, t, &format!("{what}[{}]", i + 1)))
        .collect(),
      len => Err(schema(format!("{what}: expected {n} tables for orders 1..={n}, got {len}"))),
    }
  };
  let mu = tables(&file.mu_terms, 1, 2, "mu_terms")?;
  let delta = tables(&file.delta_terms, 2, 1, "delta_terms")?;
  TruncatedDeformation::from_tail(base, mu, delta).map_err(|e| schema(e.to_string()))
}

/// The base is written inline as a full table.
pub fn deformation_to_file(def: &TruncatedDeformation) -> DeformationFile {
  DeformationFile {
    base: serde_json::to_value(bialgebra_to_file(def.base())).expect("file types serialize"),
    order: def.order(),
    mu_terms: def.mu_terms()[1..].iter().map(map_to_entries).collect(),
    delta_terms: def.delta_terms()[1..].iter().map(map_to_entries).collect(),
  }
}

pub fn load_deformation(path: &Path) -> Result<TruncatedDeformation, InputError> {
  let file: DeformationFile = read_json(path)?;
  deformation_from_file(&file).map_err(|e| schema(format!("{}: {e}", path.display())))
}

pub fn gauge_from_file(file: &GaugeFile, d: usize) -> Result<GaugeTransform, InputError> {
  if file.terms.len() != file.order {
    return Err(schema(format!("terms: expected {} tables, got {}", file.order, file.terms.len())));
  }
  let tail = file
    .terms
    .iter()
    .enumerate()
    .map(|(i, t)| map_from_entries(d, 1, 1, t, &format!("terms[{}]", i + 1)))
    .collect::<Result<_, _>>()?;
  GaugeTransform::from_tail(d, tail).map_err(|e| schema(e.to_string()))
}

pub fn gauge_to_file(g: &GaugeTransform) -> GaugeFile {
  GaugeFile { order: g.order(), terms: g.terms()[1..].iter().map(map_to_entries).collect() }
}

pub fn load_gauge(path: &Path, d: usize) -> Result<GaugeTransform, InputError> {
  let file: GaugeFile = read_json(path)?;
  gauge_from_file(&file, d).map_err(|e| schema(format!("{}: {e}", path.display())))
}

pub fn load_map(path: &Path, d: usize) -> Result<LinMap, InputError> {
  let file: MapFile = read_json(path)?;
  map_from_entries(d, 1, 1, &file.map, "map").map_err(|e| schema(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
  use super::*;
  use hombi_core::linalg::{int, ratio};
  use serde_json::json;

  #[test]
  fn entries_round_trip() {
    let b = build_taft(&ratio(-3, 2));
    let back = bialgebra_from_file(&bialgebra_to_file(&b)).unwrap();
    assert_eq!(back, b);
  }

  #[test]
  fn duplicates_are_rejected() {
    let e =
      vec![vec![json!(0), json!(0), json!(0), json!("1")], vec![json!(0), json!(0), json!(0), json!("2")]];
    let err = map_from_entries(2, 1, 2, &e, "mu").unwrap_err();
    assert!(err.to_string().contains("duplicate"), "{err}");
  }

  #[test]
  fn bad_entries_are_rejected() {
    let cases = [
      vec![json!(0), json!(5), json!(0), json!("1")],
      vec![json!(0), json!(0), json!("1")],
      vec![json!(0), json!(0), json!(0), json!(1.5)],
      vec![json!(0), json!(0), json!(0), json!("0.5")],
      vec![json!(0), json!(0), json!(0), json!("1/0")],
    ];
    for c in cases {
      assert!(map_from_entries(2, 1, 2, std::slice::from_ref(&c), "mu").is_err(), "{c:?}");
    }
  }

  #[test]
  fn delta_entries_put_the_input_first() {
    let e = vec![vec![json!(1), json!(0), json!(1), json!("-2/3")]];
    let m = map_from_entries(2, 2, 1, &e, "delta").unwrap();
    assert_eq!(m.apply_basis(&[1]), vec![int(0), ratio(-2, 3), int(0), int(0)]);
    assert_eq!(map_to_entries(&m), e);
  }

  #[test]
  fn builders_resolve() {
    let spec: BuilderSpec = serde_json::from_value(json!({"builder": "taft", "lambda": "2"})).unwrap();
    assert_eq!(build(&spec).unwrap(), build_taft(&int(2)));
    let g = base_from_value(&json!({"builder": "group", "n": 4, "k": 3})).unwrap();
    assert_eq!(g, build_group_algebra(4, 3).unwrap());
    assert!(base_from_value(&json!({"builder": "lie"})).is_err());
    assert!(base_from_value(&json!({"builder": "group", "n": 3, "k": 7})).is_err());
  }
}
