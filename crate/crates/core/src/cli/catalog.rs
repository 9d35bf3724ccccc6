//! Built-in example problems.

use super::problem::{parse_problem, ProblemFile};
use crate::error::{Error, Result};

const ENTRIES: [(&str, &str); 6] = [
    ("sl2-borel", include_str!("../../catalog/sl2-borel.json")),
    ("diagonal-sl2", include_str!("../../catalog/diagonal-sl2.json")),
    ("diagonal-heisenberg", include_str!("../../catalog/diagonal-heisenberg.json")),
    ("abelian-inclusion", include_str!("../../catalog/abelian-inclusion.json")),
    ("semidirect-split", include_str!("../../catalog/semidirect-split.json")),
    ("jacobi-broken-negative-control", include_str!("../../catalog/jacobi-broken-negative-control.json")),
];

pub fn catalog_list() -> Vec<&'static str> {
    ENTRIES.iter().map(|(name, _)| *name).collect()
}

pub fn catalog_get(name: &str) -> Result<ProblemFile> {
    let (_, text) = ENTRIES.iter().find(|(n, _)| *n == name).ok_or_else(|| Error::UnknownExample(name.to_string()))?;
    parse_problem(text)
}
