//! Hom-bialgebras by structure constants, their axioms, and standard constructions.

mod bialgebra;
mod builders;
mod constructions;
mod report;

use thiserror::Error;

pub use bialgebra::HomBialgebra;
pub use builders::{build_group_algebra, build_taft};
pub use constructions::{
  coopposite, dual, is_morphism, is_weak_morphism, morphism_report, opposite, tensor_product, yau_twist,
};
pub use report::basis_digits;
pub use report::{AxiomCheck, AxiomReport, Witness};

use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
  #[error(transparent)]
  Linalg(#[from] LinalgError),
  #[error("{what} has shape {}x{}, expected {}x{}", found.0, found.1, expected.0, expected.1)]
  Shape { what: &'static str, expected: (usize, usize), found: (usize, usize) },
  #[error("{0}")]
  Parameter(String),
  #[error("map is not a Hom-bialgebra morphism: fails {}", .0.join(", "))]
  NotMorphism(Vec<String>),
}
