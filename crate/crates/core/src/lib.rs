//! Exact computations with finite-dimensional Hom-bialgebras: axiom checks, the
//! Gerstenhaber–Schack bicomplex, antipodes, and truncated formal deformations.

pub mod actions;
pub mod cohomology;
pub mod convolution;
pub mod deformations;
pub mod linalg;
pub mod structures;
