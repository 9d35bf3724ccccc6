//! Chevalley–Eilenberg cohomology and the obstruction class.

pub mod complex;
pub mod extension;
pub mod obstruction;

pub use complex::{ce_differential, coboundary_preimage, h1_dimension, Cochain};
pub use extension::{extension_failures, find_extension, pushout_module, ExtensionDatum, Pushout};
pub use obstruction::{
    alpha, alpha_cocycle, alpha_on_wedge, complement_independent, connecting_cocycle, is_trivial, shifted_complement,
    transport_alpha,
};
