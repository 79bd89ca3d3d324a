mod common;

use hombi_core::convolution::{antipode_properties, antipode_solve, ConvolutionContext};
use hombi_core::linalg::{int, ratio, LinMap, Scalar};
use hombi_core::structures::{build_group_algebra, build_taft, dual, is_morphism, HomBialgebra};
use proptest::prelude::*;

use common::sparse;

fn builders() -> Vec<HomBialgebra> {
  let mut out: Vec<_> =
    [int(0), int(1), int(2), int(3), int(-1), ratio(1, 2)].iter().map(build_taft).collect();
  for (n, k) in [(2, 1), (3, 2), (4, 3), (4, 1), (6, 5)] {
    out.push(build_group_algebra(n, k).unwrap());
  }
  out
}

fn map_from(d: usize, entries: &[i64]) -> LinMap {
  let triples: Vec<(usize, usize, Scalar)> =
    (0..d * d).map(|i| (i / d, i % d, int(entries[i % entries.len()]))).collect();
  sparse(d, 1, 1, &triples)
}

fn column(s: &LinMap, i: usize) -> Vec<Scalar> {
  s.apply_basis(&[i])
}

#[test]
fn group_algebra_antipodes_are_inversion() {
  for n in 1..=6 {
    let b = build_group_algebra(n, 1 % n).unwrap();
    let sol = antipode_solve(&b).unwrap().expect("group algebras are Hopf");
    assert!(sol.is_unique());
    for g in 0..n {
      let mut want = vec![int(0); n];
      want[(n - g) % n] = int(1);
      assert_eq!(column(&sol.map, g), want, "n = {n}, g = {g}");
    }
    let report = antipode_properties(&b, &sol.map).unwrap();
    assert!(report.all_pass(), "n = {n}: {report}");
    assert!(report.get("S^2 = id").is_some());
  }
}

#[test]
fn sweedler_antipode() {
  let b = build_taft(&int(1));
  let sol = antipode_solve(&b).unwrap().unwrap();
  assert!(sol.is_unique());
  let e = |i: usize| {
    let mut v = vec![int(0); 4];
    v[i] = int(1);
    v
  };
  assert_eq!(column(&sol.map, 0), e(0));
  assert_eq!(column(&sol.map, 1), e(1));
  assert_eq!(column(&sol.map, 2), e(3).into_iter().map(|x| -x).collect::<Vec<_>>());
  assert_eq!(column(&sol.map, 3), e(2));
  let report = antipode_properties(&b, &sol.map).unwrap();
  assert!(report.all_pass(), "{report}");
  // Neither commutative nor cocommutative, and S has order 4: S²(e3) = −e3.
  assert!(report.get("S^2 = id").is_none());
  let s2 = sol.map.compose(&sol.map).unwrap();
  assert_eq!(column(&s2, 2), e(2).into_iter().map(|x| -x).collect::<Vec<_>>());
}

#[test]
fn twisted_taft_antipodes_regression() {
  let sweedler = antipode_solve(&build_taft(&int(1))).unwrap().unwrap().map;
  for lambda in [int(2), int(3), int(-1), ratio(1, 2)] {
    let b = build_taft(&lambda);
    let sol = antipode_solve(&b).unwrap().expect("an antipode exists");
    assert!(sol.is_unique());
    assert_eq!(sol.map, sweedler, "λ = {lambda}");
    assert!(antipode_properties(&b, &sol.map).unwrap().all_pass());
  }
}

#[test]
fn degenerate_taft_antipode_is_not_unique() {
  let b = build_taft(&int(0));
  let sol = antipode_solve(&b).unwrap().unwrap();
  assert_eq!(sol.free_dim, 12);
  let report = antipode_properties(&b, &sol.map).unwrap();
  for name in ["S * id = eta eps", "id * S = eta eps", "S eta = eta", "eps S = eps", "S alpha = alpha S"] {
    assert!(report.passed(name), "{name}");
  }
}

#[test]
fn dual_antipode_is_the_transpose() {
  for b in builders() {
    if let (Some(s), Some(sd)) = (antipode_solve(&b).unwrap(), antipode_solve(&dual(&b)).unwrap()) {
      if s.is_unique() {
        assert_eq!(sd.map, s.map.transpose());
      }
    }
  }
}

#[test]
fn antipodes_commute_with_morphisms() {
  // g ↦ 2g on ℤ/5 and g ↦ 5g on ℤ/6 are Hopf automorphisms; α on the Taft algebras is a
  // morphism as well.
  let cases: Vec<(HomBialgebra, LinMap)> = vec![
    (
      build_group_algebra(5, 1).unwrap(),
      sparse(5, 1, 1, &(0..5).map(|g| ((2 * g) % 5, g, int(1))).collect::<Vec<_>>()),
    ),
    (
      build_group_algebra(6, 1).unwrap(),
      sparse(6, 1, 1, &(0..6).map(|g| ((5 * g) % 6, g, int(1))).collect::<Vec<_>>()),
    ),
    (build_taft(&int(2)), build_taft(&int(2)).alpha().clone()),
    (build_group_algebra(4, 3).unwrap(), build_group_algebra(4, 3).unwrap().alpha().clone()),
  ];
  for (b, f) in cases {
    assert!(is_morphism(&f, &b, &b).unwrap());
    let s = antipode_solve(&b).unwrap().unwrap().map;
    assert_eq!(s.compose(&f).unwrap(), f.compose(&s).unwrap());
  }
}

#[test]
fn convolution_unit_is_twisted() {
  for b in builders() {
    let ctx = ConvolutionContext::of(&b);
    let f = map_from(b.dim(), &[1, -2, 0, 3, 1]);
    let twisted = b.alpha().compose(&f).unwrap().compose(b.alpha()).unwrap();
    assert_eq!(ctx.convolve(&f, &ctx.unit()).unwrap(), twisted);
    assert_eq!(ctx.convolve(&ctx.unit(), &f).unwrap(), twisted);
    assert_eq!(ctx.gamma(&f).unwrap(), twisted);
  }
}

proptest! {
  #![proptest_config(ProptestConfig::with_cases(32))]

  #[test]
  fn convolution_is_hom_associative(
    f in proptest::collection::vec(-3i64..4, 1..9),
    g in proptest::collection::vec(-3i64..4, 1..9),
    h in proptest::collection::vec(-3i64..4, 1..9),
    which in 0usize..11,
  ) {
    let b = &builders()[which];
    let ctx = ConvolutionContext::of(b);
    let d = b.dim();
    let (f, g, h) = (map_from(d, &f), map_from(d, &g), map_from(d, &h));
    let lhs = ctx.convolve(&ctx.convolve(&f, &g).unwrap(), &ctx.gamma(&h).unwrap()).unwrap();
    let rhs = ctx.convolve(&ctx.gamma(&f).unwrap(), &ctx.convolve(&g, &h).unwrap()).unwrap();
    prop_assert_eq!(lhs, rhs);
  }

  #[test]
  fn convolution_is_bilinear(
    f in proptest::collection::vec(-3i64..4, 1..9),
    g in proptest::collection::vec(-3i64..4, 1..9),
    k in -3i64..4,
  ) {
    let b = build_taft(&int(2));
    let ctx = ConvolutionContext::of(&b);
    let (f, g) = (map_from(4, &f), map_from(4, &g));
    let id = b.id();
    let lhs = ctx.convolve(&(&f.scale(&int(k)) + &g), &id).unwrap();
    let rhs = &ctx.convolve(&f, &id).unwrap().scale(&int(k)) + &ctx.convolve(&g, &id).unwrap();
    prop_assert_eq!(lhs, rhs);
  }
}
