//! Lie algebras, inclusions and finite-dimensional modules.

pub mod algebra;
pub mod module;
pub mod pair;
pub mod tuples;

pub use algebra::{LieAlgebra, LieValidation};
pub use module::{
    dual_module, ext_power_module, hom_module, sym_power_module, tensor_module, LieModule, ModuleMap,
};
pub use pair::InclusionPair;
