#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;

use hombi_cli::io::{
  bialgebra_from_file, bialgebra_to_file, deformation_to_file, load_deformation, load_gauge,
  map_from_entries, map_to_entries, write_json, BialgebraFile, RawEntry,
};
use hombi_core::deformations::{apply_gauge, check_unit_counit, residuals, TruncatedDeformation};
use hombi_core::linalg::{int, LinMap};
use hombi_core::structures::{build_group_algebra, build_taft, HomBialgebra};
use proptest::prelude::*;
use serde_json::{json, Value};
use tempfile::TempDir;

use common::taft_z2;

struct Run {
  code: i32,
  stdout: String,
  stderr: String,
}

fn hombi(args: &[&str]) -> Run {
  let out = Command::new(env!("CARGO_BIN_EXE_hombi")).args(args).output().expect("binary runs");
  Run {
    code: out.status.code().expect("exit code"),
    stdout: String::from_utf8(out.stdout).unwrap(),
    stderr: String::from_utf8(out.stderr).unwrap(),
  }
}

fn write_bialgebra(dir: &TempDir, name: &str, b: &HomBialgebra) -> PathBuf {
  let path = dir.path().join(name);
  write_json(&path, &bialgebra_to_file(b)).unwrap();
  path
}

fn write_value(dir: &TempDir, name: &str, v: &Value) -> PathBuf {
  let path = dir.path().join(name);
  std::fs::write(&path, v.to_string()).unwrap();
  path
}

fn s(p: &Path) -> &str {
  p.to_str().unwrap()
}

/// The `a = 1, c = 0` representative as a first-order deformation of `(T₂)_2`.
fn taft_a_first_order() -> TruncatedDeformation {
  let (f, g) = taft_z2(&int(2), &int(1), &int(0));
  TruncatedDeformation::from_tail(build_taft(&int(2)), vec![f], vec![g]).unwrap()
}

/// True when some digit is directly followed by a decimal point and another digit.
fn has_float(text: &str) -> bool {
  let b = text.as_bytes();
  (1..b.len().saturating_sub(1))
    .any(|i| b[i] == b'.' && b[i - 1].is_ascii_digit() && b[i + 1].is_ascii_digit())
}

#[test]
fn validate_taft_file_passes() {
  let dir = TempDir::new().unwrap();
  let taft = write_bialgebra(&dir, "taft.json", &build_taft(&int(2)));
  let r = hombi(&["validate", s(&taft)]);
  assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
  assert!(r.stdout.contains("all checks pass"), "{}", r.stdout);
}

#[test]
fn validate_broken_file_reports_witness() {
  let dir = TempDir::new().unwrap();
  let mut file = bialgebra_to_file(&build_taft(&int(2)));
  // Flip the sign of μ(e2⊗e3) = 2 e4.
  let entry = file.mu.iter_mut().find(|e| e[..3] == [json!(1), json!(2), json!(3)]).expect("entry present");
  entry[3] = json!("-2");
  let path = dir.path().join("broken.json");
  write_json(&path, &file).unwrap();
  let r = hombi(&["validate", s(&path)]);
  assert_eq!(r.code, 1, "{}", r.stdout);
  assert!(r.stdout.contains("FAIL"), "{}", r.stdout);
  let j = hombi(&["--json", "validate", s(&path)]);
  let v: Value = serde_json::from_str(&j.stdout).unwrap();
  assert_eq!(v["passed"], false);
  let failed: Vec<&Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect();
  assert!(!failed.is_empty());
  assert!(failed.iter().all(|c| c["witness"].is_object()), "{failed:?}");
}

#[test]
fn validate_builder_needs_no_file() {
  assert_eq!(hombi(&["validate", "--builder", "taft", "--lambda", "1"]).code, 0);
  assert_eq!(hombi(&["validate", "--builder", "group", "--n", "4", "--k", "3"]).code, 0);
  let r = hombi(&["--quiet", "validate", "--builder", "taft", "--lambda", "-1/2"]);
  assert_eq!((r.code, r.stdout.as_str()), (0, ""), "{}", r.stderr);
}

#[test]
fn cohomology_of_taft_and_group() {
  let dir = TempDir::new().unwrap();
  let taft2 = write_bialgebra(&dir, "taft2.json", &build_taft(&int(2)));
  let r = hombi(&["cohomology", s(&taft2), "1", "--representatives"]);
  assert_eq!(r.code, 0, "{}", r.stderr);
  assert!(r.stdout.contains("dim H^1 = 1"), "{}", r.stdout);
  assert!(r.stdout.contains("c1,1(e3) = e3"), "{}", r.stdout);

  // Regression: the exact complex has no second-degree classes for λ = 2.
  let r = hombi(&["cohomology", s(&taft2), "2"]);
  assert_eq!(r.code, 0, "{}", r.stderr);
  assert!(r.stdout.contains("dim Z^2 = 7, dim B^2 = 7, dim H^2 = 0"), "{}", r.stdout);

  let z2 = write_bialgebra(&dir, "z2group.json", &build_group_algebra(2, 1).unwrap());
  let r = hombi(&["cohomology", s(&z2), "1"]);
  assert!(r.stdout.contains("dim H^1 = 0"), "{}", r.stdout);
  let r = hombi(&["cohomology", "--builder", "group", "--n", "2", "1"]);
  assert!(r.stdout.contains("dim H^1 = 0"), "{}", r.stdout);
}

#[test]
fn cohomology_rejects_degree_zero_and_reports_containment() {
  assert_eq!(hombi(&["cohomology", "--builder", "taft", "--lambda", "2", "0"]).code, 2);
  let r = hombi(&["cohomology", "--builder", "taft", "--lambda", "2", "3"]);
  assert_eq!(r.code, 1);
  assert!(r.stderr.contains("square to zero"), "{}", r.stderr);
}

#[test]
fn residuals_of_zero_tail_pass() {
  let dir = TempDir::new().unwrap();
  let d = write_value(&dir, "d.json", &json!({ "base": { "builder": "taft", "lambda": "2" }, "order": 3 }));
  let r = hombi(&["deform", s(&d), "residuals"]);
  assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
  for order in 1..=3 {
    assert!(r.stdout.contains(&format!("order {order}: assoc ok, coassoc ok, compat ok")), "{}", r.stdout);
  }
}

#[test]
fn residuals_of_representative_fail_at_second_order() {
  let dir = TempDir::new().unwrap();
  let padded = taft_a_first_order().extended(LinMap::zero(4, 1, 2), LinMap::zero(4, 2, 1)).unwrap();
  let path = dir.path().join("d.json");
  write_json(&path, &deformation_to_file(&padded)).unwrap();
  let r = hombi(&["deform", s(&path), "residuals"]);
  assert_eq!(r.code, 1, "{}", r.stdout);
  assert!(r.stdout.contains("order 1: assoc ok, coassoc ok, compat ok"), "{}", r.stdout);
  assert!(r.stdout.contains("order 2: assoc nonzero"), "{}", r.stdout);
  assert!(r.stdout.contains("    assoc("), "{}", r.stdout);
}

#[test]
fn obstruction_writes_extension() {
  let dir = TempDir::new().unwrap();
  let d = dir.path().join("d.json");
  write_json(&d, &deformation_to_file(&taft_a_first_order())).unwrap();
  let out = dir.path().join("d2.json");
  let r = hombi(&["deform", s(&d), "obstruction", "--order", "2", "--out", s(&out)]);
  assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
  assert!(r.stdout.contains("extension: found"), "{}", r.stdout);
  let extended = load_deformation(&out).unwrap();
  assert_eq!(extended.order(), 2);
  assert!(residuals(&extended).unwrap().all_vanish());
}

#[test]
fn normalize_unit_emits_both_files() {
  let dir = TempDir::new().unwrap();
  let d = dir.path().join("d.json");
  write_json(&d, &deformation_to_file(&taft_a_first_order())).unwrap();
  let (out, gauge_out) = (dir.path().join("n.json"), dir.path().join("g.json"));
  let r = hombi(&["deform", s(&d), "normalize-unit", "--out", s(&out), "--gauge-out", s(&gauge_out)]);
  assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
  let normalized = load_deformation(&out).unwrap();
  assert!(check_unit_counit(&normalized).unwrap().iter().all(|c| c.passed()));
  let gauge = load_gauge(&gauge_out, 4).unwrap();
  assert_eq!(apply_gauge(&taft_a_first_order(), &gauge).unwrap(), normalized);

  // The gauge file feeds back into `deform gauge`.
  let regauged = dir.path().join("r.json");
  let r = hombi(&["deform", s(&d), "gauge", "--phi", s(&gauge_out), "--out", s(&regauged)]);
  assert_eq!(r.code, 0, "{}", r.stderr);
  assert_eq!(load_deformation(&regauged).unwrap(), normalized);
}

#[test]
fn deformation_twist_by_alpha() {
  let dir = TempDir::new().unwrap();
  let d = dir.path().join("d.json");
  write_json(&d, &deformation_to_file(&taft_a_first_order())).unwrap();
  let beta =
    write_value(&dir, "beta.json", &json!({ "map": [[0, 0, "1"], [1, 1, "1"], [2, 2, "2"], [3, 3, "2"]] }));
  let out = dir.path().join("t.json");
  let r = hombi(&["deform", s(&d), "twist", "--beta", s(&beta), "--out", s(&out)]);
  assert_eq!(r.code, 0, "{}", r.stderr);
  assert!(r.stdout.contains("residuals vanish: yes"), "{}", r.stdout);
  assert!(residuals(&load_deformation(&out).unwrap()).unwrap().all_vanish());
}

#[test]
fn antipode_of_group_and_taft() {
  let dir = TempDir::new().unwrap();
  let z2 = write_bialgebra(&dir, "z2group.json", &build_group_algebra(2, 1).unwrap());
  let r = hombi(&["antipode", s(&z2)]);
  assert_eq!(r.code, 0);
  assert!(r.stdout.contains("S(e1) = e1"), "{}", r.stdout);
  assert!(r.stdout.contains("S(e0) = e0"), "{}", r.stdout);

  let sweedler = ["S(e1) = e1", "S(e2) = e2", "S(e3) = -e4", "S(e4) = e3"];
  for lambda in ["1", "2"] {
    let taft =
      write_bialgebra(&dir, &format!("taft{lambda}.json"), &build_taft(&int(lambda.parse().unwrap())));
    let r = hombi(&["antipode", s(&taft)]);
    assert_eq!(r.code, 0);
    let lines: BTreeSet<&str> = r.stdout.lines().filter(|l| l.starts_with("S(")).collect();
    assert_eq!(lines, sweedler.into_iter().collect(), "{}", r.stdout);
    assert!(r.stdout.contains("unique"), "{}", r.stdout);
  }
}

#[test]
fn antipode_exits_zero_when_none_exists() {
  // A bialgebra with no antipode: the two-element monoid {1, x} with x² = x.
  let dir = TempDir::new().unwrap();
  let monoid = json!({
    "dim": 2,
    "mu": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 1, "1"]],
    "delta": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
    "eta": ["1", "0"],
    "eps": ["1", "1"],
    "alpha": [[0, 0, "1"], [1, 1, "1"]]
  });
  let path = write_value(&dir, "monoid.json", &monoid);
  assert_eq!(hombi(&["validate", s(&path)]).code, 0);
  let r = hombi(&["antipode", s(&path)]);
  assert_eq!(r.code, 0);
  assert_eq!(r.stdout.trim(), "no antipode");
}

#[test]
fn structure_commands_emit_valid_files() {
  let dir = TempDir::new().unwrap();
  let z2 = write_bialgebra(&dir, "z2.json", &build_group_algebra(2, 1).unwrap());
  let taft = write_bialgebra(&dir, "taft.json", &build_taft(&int(2)));

  let dual = dir.path().join("dual.json");
  assert_eq!(hombi(&["dual", s(&taft), "--out", s(&dual)]).code, 0);
  assert_eq!(hombi(&["validate", s(&dual)]).code, 0);
  let back = hombi(&["--json", "dual", s(&dual)]);
  let file: BialgebraFile = serde_json::from_str(&back.stdout).unwrap();
  assert_eq!(bialgebra_from_file(&file).unwrap(), build_taft(&int(2)));

  let prod = dir.path().join("prod.json");
  assert_eq!(hombi(&["tensor", s(&z2), s(&taft), "--out", s(&prod)]).code, 0);
  assert_eq!(hombi(&["validate", s(&prod)]).code, 0);

  let beta =
    write_value(&dir, "beta.json", &json!({ "map": [[0, 0, "1"], [1, 1, "1"], [2, 2, "2"], [3, 3, "2"]] }));
  let twisted = dir.path().join("tw.json");
  assert_eq!(hombi(&["twist", s(&taft), "--beta", s(&beta), "--out", s(&twisted)]).code, 0);
  assert_eq!(hombi(&["validate", s(&twisted)]).code, 0);

  // A map that is not a morphism cannot twist.
  let bad =
    write_value(&dir, "bad.json", &json!({ "map": [[0, 1, "1"], [1, 0, "1"], [2, 2, "1"], [3, 3, "1"]] }));
  assert_eq!(hombi(&["twist", s(&taft), "--beta", s(&bad)]).code, 1);
}

#[test]
fn parse_errors_exit_two_with_location() {
  let dir = TempDir::new().unwrap();
  let path = dir.path().join("bad.json");
  std::fs::write(&path, "{\n  \"dim\": 2,\n  \"mu\": [\n").unwrap();
  let r = hombi(&["validate", s(&path)]);
  assert_eq!(r.code, 2);
  assert!(r.stderr.contains("line"), "{}", r.stderr);

  let mut file = bialgebra_to_file(&build_taft(&int(2)));
  let first = file.mu[0].clone();
  file.mu.push(first);
  let dup = dir.path().join("dup.json");
  write_json(&dup, &file).unwrap();
  let r = hombi(&["validate", s(&dup)]);
  assert_eq!(r.code, 2);
  assert!(r.stderr.contains("duplicate"), "{}", r.stderr);

  let mut file = bialgebra_to_file(&build_taft(&int(2)));
  file.eps[0] = "0.5".into();
  let float = dir.path().join("float.json");
  write_json(&float, &file).unwrap();
  assert_eq!(hombi(&["validate", s(&float)]).code, 2);

  assert_eq!(hombi(&["validate", s(&dir.path().join("missing.json"))]).code, 2);
  assert_eq!(hombi(&["validate", "--builder", "taft", "--lambda", "x"]).code, 2);
}

#[test]
fn json_output_is_stable_and_exact() {
  let runs = [
    vec!["--json", "cohomology", "--builder", "taft", "--lambda", "1/2", "2", "--representatives"],
    vec!["--json", "antipode", "--builder", "taft", "--lambda", "-1/3"],
    vec!["--json", "validate", "--builder", "group", "--n", "3"],
    vec!["cohomology", "--builder", "taft", "--lambda", "2/3", "1", "--representatives"],
  ];
  for args in runs {
    let first = hombi(&args);
    assert_eq!(first.code, 0, "{args:?}: {}", first.stderr);
    let second = hombi(&args);
    assert_eq!(first.stdout, second.stdout);
    assert!(!has_float(&first.stdout), "{}", first.stdout);
    if args[0] == "--json" {
      serde_json::from_str::<Value>(&first.stdout).unwrap();
    }
  }
}

#[test]
fn files_round_trip_exactly() {
  for b in [build_taft(&int(2)), build_taft(&int(-1)), build_group_algebra(4, 3).unwrap()] {
    let file = bialgebra_to_file(&b);
    let text = hombi_cli::io::to_pretty(&file);
    let parsed: BialgebraFile = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed, file);
    assert_eq!(bialgebra_to_file(&bialgebra_from_file(&parsed).unwrap()), file);
  }
}

/// Entry sets after dropping zero coefficients and normalizing the rational text.
fn normalized(d: usize, p: usize, q: usize, entries: &[RawEntry]) -> BTreeSet<String> {
  let f = map_from_entries(d, p, q, entries, "map").unwrap();
  map_to_entries(&f).iter().map(|e| Value::from(e.clone()).to_string()).collect()
}

proptest! {
  #[test]
  fn sparse_tables_round_trip(
    d in 1usize..4,
    raw in proptest::collection::vec((0usize..64, -6i64..7, 1i64..5), 0..20),
  ) {
    let (p, q) = (1, 2);
    // One coefficient per index triple; later draws overwrite earlier ones.
    let cells: std::collections::BTreeMap<usize, (i64, i64)> =
      raw.into_iter().map(|(idx, num, den)| (idx % d.pow(3), (num, den))).collect();
    let entries: Vec<RawEntry> = cells
      .iter()
      .map(|(&idx, &(num, den))| vec![json!(idx / (d * d)), json!(idx / d % d), json!(idx % d), json!(format!("{num}/{den}"))])
      .collect();
    let f = map_from_entries(d, p, q, &entries, "map").unwrap();
    let emitted = map_to_entries(&f);
    prop_assert_eq!(map_from_entries(d, p, q, &emitted, "map").unwrap(), f);
    prop_assert_eq!(normalized(d, p, q, &emitted), normalized(d, p, q, &entries));
    prop_assert!(emitted.iter().all(|e| e[3].as_str().is_some_and(|t| t != "0")));
  }
}
