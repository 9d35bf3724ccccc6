#![allow(clippy::needless_range_loop)]

//! Exact computations for PBW-type splittings of Lie algebra inclusions.
//!
//! For an inclusion `h ⊂ g` with quotient module `n = g/h`, the crate
//! computes the obstruction class `α` in `Ext¹_h(n ⊗ n, n)`, decides whether
//! it vanishes, builds the splittings of the degree filtrations on
//! `U(g)/U(g)h` and its first-order analogue when it does, and checks all of
//! this against a brute-force search for equivariant sections.
//!
//! Everything is exact: scalars are arbitrary-precision rationals.

pub mod cli;
pub mod cohomology;
pub mod error;
pub mod koszul;
pub mod lie;
pub mod linalg;
pub mod pbw;

pub use error::{Error, Result};
