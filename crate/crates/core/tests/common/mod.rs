//! Hand-entered structure tables shared by integration tests.
#![allow(dead_code)]

use hombi_core::linalg::{int, LinMap, Matrix, Scalar};

/// A map `B^⊗q → B^⊗p` over a `d`-dimensional base from `(output index, input index, value)`
/// triples, indices being row-major tensor indices.
pub fn sparse(d: usize, p: usize, q: usize, entries: &[(usize, usize, Scalar)]) -> LinMap {
  let mut m = Matrix::zeros(d.pow(p as u32), d.pow(q as u32));
  for (r, c, x) in entries {
    *m.entry_mut(*r, *c) += x;
  }
  LinMap::new(d, p, q, m).unwrap()
}

/// The Taft-type 2-cocycle with free parameters `a`, `c`: returns `(f, g)` with
/// `f : B⊗B → B` and `g : B → B⊗B`. Basis `e1..e4` is indexed `0..3`.
pub fn taft_z2(lambda: &Scalar, a: &Scalar, c: &Scalar) -> (LinMap, LinMap) {
  let l = lambda.clone();
  let la = &l * a;
  let lc = &l * c;
  let two = int(2);
  let pair = |i: usize, j: usize| i * 4 + j;
  let mut f = Vec::new();
  let mut put = |i: usize, j: usize, k: usize, x: Scalar| f.push((k, pair(i, j), x));
  for (i, j) in [(0, 0), (0, 1), (1, 0)] {
    put(i, j, 0, a.clone());
    put(i, j, 1, a.clone());
  }
  for j in 2..4 {
    put(0, j, 2, la.clone());
    put(0, j, 3, la.clone());
  }
  put(1, 1, 0, a.clone());
  put(1, 1, 1, -int(3) * a);
  put(1, 2, 3, lc.clone());
  put(1, 2, 2, -la.clone());
  put(1, 3, 2, &l * (&two * a - c));
  put(1, 3, 3, -la.clone());
  put(2, 0, 2, la.clone());
  put(2, 0, 3, -la.clone());
  put(2, 1, 2, -la.clone());
  put(2, 1, 3, -lc.clone());
  put(3, 0, 3, la.clone());
  put(3, 0, 2, -la.clone());
  put(3, 1, 2, -(&l * (&two * a - c)));
  put(3, 1, 3, -la.clone());
  let f = sparse(4, 1, 2, &f);

  let mut g = Vec::new();
  let mut gput = |i: usize, j: usize, k: usize, x: Scalar| g.push((pair(j, k), i, x));
  let na = -a.clone();
  gput(0, 0, 0, na.clone());
  gput(0, 0, 1, na.clone());
  gput(0, 1, 0, na.clone());
  gput(0, 1, 1, a.clone());
  gput(1, 0, 0, na.clone());
  gput(1, 0, 1, a.clone());
  gput(1, 1, 0, a.clone());
  gput(1, 1, 1, na.clone());
  gput(2, 0, 2, la.clone());
  gput(2, 1, 2, -la.clone());
  gput(2, 2, 0, -la.clone());
  gput(2, 2, 1, -la.clone());
  gput(3, 0, 3, -la.clone());
  gput(3, 1, 3, -la.clone());
  gput(3, 3, 0, la.clone());
  gput(3, 3, 1, -la.clone());
  (f, sparse(4, 2, 1, &g))
}

/// The Taft-type 2-coboundary with free parameter `c`; its `g` part is zero.
pub fn taft_b2(lambda: &Scalar, c: &Scalar) -> (LinMap, LinMap) {
  let lc = lambda * c;
  let pair = |i: usize, j: usize| i * 4 + j;
  let f = sparse(
    4,
    1,
    2,
    &[
      (3, pair(1, 2), lc.clone()),
      (2, pair(1, 3), -lc.clone()),
      (3, pair(2, 1), -lc.clone()),
      (2, pair(3, 1), lc.clone()),
    ],
  );
  (f, LinMap::zero(4, 2, 1))
}
