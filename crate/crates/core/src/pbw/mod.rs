//! Normal forms, filtrations and splittings.

pub mod element;
pub mod filtration;
pub mod hopf;
pub mod normal;
pub mod oracle;
pub mod splitting;
pub mod verdict;

pub use element::{Combination, FreeWordElement, InducedElement, OrderedMonomialElement};
pub use hopf::{antipode_word, coproduct_word};
pub use normal::{reduce_h1, straighten_g, NormalForms, Side};
pub use filtration::{build_filtration, expected_level_dim, gr_check, FilteredModule, GrReport};
pub use splitting::{
    closed_form_mismatches, pbw_splitting_i, s2_closed_form, s3_closed_form, splitting_s, MapSummary, TMaps, VerifiedMap,
};
pub use oracle::section_oracle;
pub use verdict::{equivalence_check, f2_class_check, twisted_verdict, EquivalenceReport, F2Report, LevelVerdict, TwistedReport};
