//! Exact linear algebra over the rationals.

pub mod matrix;
pub mod scalar;
pub mod sparse;

pub use matrix::{span_basis, subspace_intersection, tensor_map, Matrix};
pub use scalar::Scalar;
pub use sparse::{SparseEchelon, SparseSystem, SparseVec};
