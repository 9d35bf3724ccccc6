//! Koszulity checks for the quadratic algebra of a pair.

pub mod complex;
pub mod quadratic;

pub use complex::{k_tilde_basis, k_tilde_expected_dim, koszul_acyclicity, KTildeCheck, KoszulReport, KoszulSlice};
pub use quadratic::{
    bg_conditions, qa_closed_form, qa_graded_dimension, BgReport, QaDegree, QaDimension, QuadraticData,
};
