//! The problem file format.
//!
//! A problem is a JSON document; every rational is a string `"p"` or
//! `"p/q"`:
//!
//! ```json
//! {
//!   "name": "sl2-borel",
//!   "g": { "dim": 3, "labels": ["e", "h", "f"],
//!          "brackets": [[0, 2, [[1, "1"]]], [1, 0, [[0, "2"]]], [1, 2, [[2, "-2"]]]] },
//!   "h": { "indices": [0, 1] },
//!   "modules": { "V": { "dim": 1, "action": [[["0"]], [["0"]]] } },
//!   "settings": { "max_degree": 4, "checks": ["alpha", "koszul"] },
//!   "negative_control": false
//! }
//! ```
//!
//! A bracket entry `[i, j, [[k, c], ...]]` sets `[x_i, x_j] = Σ c x_k`; the
//! reversed pair is filled in by antisymmetry unless listed as well. `h` is
//! given either by `indices` (a subset of the basis of `g`) or by
//! `embedding` (one coordinate vector of `g` per basis element of `h`).
//! Module actions list one square matrix (as rows) per basis element of
//! `h`. The module names `n`, `trivial` and `adjoint` are built in.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{InclusionPair, LieAlgebra, LieModule, LieValidation};
use crate::linalg::scalar::parse_scalar;
use crate::linalg::{Matrix, Scalar, SparseVec};

pub const BUILTIN_MODULES: [&str; 3] = ["n", "trivial", "adjoint"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub name: String,
    pub g: AlgebraSpec,
    pub h: SubalgebraSpec,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default, skip_serializing_if = "Settings::is_empty")]
    pub settings: Settings,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub negative_control: bool,
}

/// `(i, j, [(k, coefficient)])`.
pub type BracketSpec = (usize, usize, Vec<(usize, String)>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubalgebraSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub indices: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub dim: usize,
    pub action: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Settings {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<String>>,
}

impl Settings {
    pub fn is_empty(&self) -> bool {
        self.max_degree.is_none() && self.checks.is_none()
    }
}

fn invalid(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Validation { path: path.into(), message: message.into() }
}

fn scalar_at(text: &str, path: &str) -> Result<Scalar> {
    parse_scalar(text).map_err(|e| invalid(path, e.to_string()))
}

fn matrix_at(rows: &[Vec<String>], dim: usize, path: &str) -> Result<Matrix> {
    if rows.len() != dim {
        return Err(invalid(path, format!("expected {dim} rows, found {}", rows.len())));
    }
    let mut out = Vec::with_capacity(dim);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(invalid(format!("{path}[{r}]"), format!("expected {dim} entries, found {}", row.len())));
        }
        out.push(row.iter().enumerate().map(|(c, x)| scalar_at(x, &format!("{path}[{r}][{c}]"))).collect::<Result<Vec<_>>>()?);
    }
    Matrix::from_rows(out, dim)
}

pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_problem(path: &std::path::Path) -> Result<ProblemFile> {
    let text = std::fs::read_to_string(path)?;
    parse_problem(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn serialize_problem(p: &ProblemFile) -> String {
    serde_json::to_string_pretty(p).expect("problem files serialize")
}

/// A problem file turned into algebraic objects.
#[derive(Clone, Debug)]
pub struct Problem {
    pub file: ProblemFile,
    pub algebra: LieAlgebra,
    pub validation: LieValidation,
    pub pair: InclusionPair,
    pub modules: BTreeMap<String, LieModule>,
}

impl Problem {
    /// Validates and builds. A Jacobi failure is an error unless the
    /// problem is marked `negative_control`.
    pub fn build(file: ProblemFile) -> Result<Self> {
        let algebra = build_algebra(&file.g)?;
        let validation = algebra.validate();
        if let Some(&(i, j)) = validation.antisymmetry.first() {
            return Err(invalid("g.brackets", format!("pair ({i}, {j}) violates antisymmetry")));
        }
        if let (Some(&(i, j, k)), false) = (validation.jacobi.first(), file.negative_control) {
            return Err(invalid("g.brackets", format!("Jacobi identity fails on ({i}, {j}, {k})")));
        }
        let dg = algebra.dim();
        let pair = match (&file.h.indices, &file.h.embedding) {
            (Some(ix), None) => {
                if let Some(i) = ix.iter().position(|&i| i >= dg) {
                    return Err(invalid(format!("h.indices[{i}]"), format!("index out of range for dimension {dg}")));
                }
                InclusionPair::from_indices(algebra.clone(), ix)
            }
            (None, Some(cols)) => {
                let mut columns = Vec::with_capacity(cols.len());
                for (c, col) in cols.iter().enumerate() {
                    if col.len() != dg {
                        return Err(invalid(format!("h.embedding[{c}]"), format!("expected {dg} coordinates")));
                    }
                    columns.push(
                        col.iter()
                            .enumerate()
                            .map(|(r, x)| scalar_at(x, &format!("h.embedding[{c}][{r}]")))
                            .collect::<Result<Vec<_>>>()?,
                    );
                }
                InclusionPair::new(algebra.clone(), Matrix::from_columns(&columns, dg))
            }
            _ => return Err(invalid("h", "give exactly one of `indices` and `embedding`")),
        }
        .map_err(|e| invalid("h", e.to_string()))?;

        let mut modules = BTreeMap::new();
        for (name, spec) in &file.modules {
            let path = format!("modules.{name}");
            if BUILTIN_MODULES.contains(&name.as_str()) {
                return Err(invalid(path, "name is reserved for a built-in module"));
            }
            if spec.action.len() != pair.dim_h() {
                return Err(invalid(
                    format!("{path}.action"),
                    format!("expected {} matrices (one per basis element of h), found {}", pair.dim_h(), spec.action.len()),
                ));
            }
            let action = spec
                .action
                .iter()
                .enumerate()
                .map(|(i, m)| matrix_at(m, spec.dim, &format!("{path}.action[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            let m = LieModule::new(pair.h().clone(), spec.dim, action)?;
            if let Some(&(i, j)) = m.violations().first() {
                return Err(invalid(path, format!("action does not respect the bracket of h-basis pair ({i}, {j})")));
            }
            modules.insert(name.clone(), m);
        }
        Ok(Problem { file, algebra, validation, pair, modules })
    }

    pub fn name(&self) -> &str {
        &self.file.name
    }

    /// A built-in or declared module.
    pub fn module(&self, name: &str) -> Result<LieModule> {
        match name {
            "n" => Ok(self.pair.quotient_module()),
            "trivial" => Ok(self.pair.trivial(1)),
            "adjoint" => Ok(self.pair.h_adjoint()),
            _ => self.modules.get(name).cloned().ok_or_else(|| Error::MissingModule(name.to_string())),
        }
    }
}

fn build_algebra(spec: &AlgebraSpec) -> Result<LieAlgebra> {
    let n = spec.dim;
    let labels = if spec.labels.is_empty() {
        (0..n).map(|i| format!("x{i}")).collect()
    } else if spec.labels.len() == n {
        spec.labels.clone()
    } else {
        return Err(invalid("g.labels", format!("expected {n} labels, found {}", spec.labels.len())));
    };
    let mut table: Vec<Option<SparseVec>> = vec![None; n * n];
    for (b, (i, j, terms)) in spec.brackets.iter().enumerate() {
        let path = format!("g.brackets[{b}]");
        if *i >= n || *j >= n {
            return Err(invalid(path, format!("index out of range for dimension {n}")));
        }
        if table[i * n + j].is_some() {
            return Err(invalid(path, format!("bracket ({i}, {j}) listed twice")));
        }
        let mut pairs = Vec::with_capacity(terms.len());
        for (t, (k, c)) in terms.iter().enumerate() {
            if *k >= n {
                return Err(invalid(format!("{path}[{t}]"), format!("index {k} out of range for dimension {n}")));
            }
            pairs.push((*k, scalar_at(c, &format!("{path}[{t}]"))?));
        }
        table[i * n + j] = Some(SparseVec::from_pairs(pairs));
    }
    let mut full = vec![SparseVec::new(); n * n];
    for i in 0..n {
        for j in 0..n {
            full[i * n + j] = match (&table[i * n + j], &table[j * n + i]) {
                (Some(v), _) => v.clone(),
                (None, Some(v)) => v.scale(&-Scalar::from_integer(1.into())),
                (None, None) => SparseVec::new(),
            };
        }
    }
    Ok(LieAlgebra::from_table(labels, full))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::catalog::{catalog_get, catalog_list};

    #[test]
    fn catalog_round_trip() {
        for name in catalog_list() {
            let p = catalog_get(name).unwrap();
            assert_eq!(parse_problem(&serialize_problem(&p)).unwrap(), p, "{name}");
        }
    }

    #[test]
    fn borel_entry_is_the_standard_pair() {
        let p = Problem::build(catalog_get("sl2-borel").unwrap()).unwrap();
        assert_eq!(p.algebra, LieAlgebra::sl2());
        assert_eq!(p.pair.dim_h(), 2);
    }

    #[test]
    fn indices_and_embedding_agree() {
        let mut file = catalog_get("sl2-borel").unwrap();
        let a = Problem::build(file.clone()).unwrap();
        file.h = SubalgebraSpec {
            indices: None,
            embedding: Some(vec![
                vec!["1".into(), "0".into(), "0".into()],
                vec!["0".into(), "1".into(), "0".into()],
            ]),
        };
        let b = Problem::build(file).unwrap();
        assert_eq!(a.pair.embedding(), b.pair.embedding());
        assert_eq!(a.pair.adapted(), b.pair.adapted());
    }

    #[test]
    fn antisymmetry_violation_names_the_pair() {
        let mut file = catalog_get("sl2-borel").unwrap();
        file.g.brackets.push((2, 0, vec![(1, "1".into())]));
        match Problem::build(file) {
            Err(Error::Validation { path, message }) => {
                assert_eq!(path, "g.brackets");
                assert!(message.contains("(0, 2)"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_errors_are_located() {
        let e = parse_problem("{\n  \"name\": \"x\",\n  \"g\": {\"dim\": 1,}\n}").unwrap_err();
        assert!(e.to_string().contains("line 3"), "{e}");
    }

    #[test]
    fn jacobi_needs_negative_control_flag() {
        let mut file = catalog_get("jacobi-broken-negative-control").unwrap();
        let p = Problem::build(file.clone()).unwrap();
        assert!(!p.validation.is_valid());
        file.negative_control = false;
        assert!(matches!(Problem::build(file), Err(Error::Validation { .. })));
    }

    #[test]
    fn bad_modules_are_rejected() {
        let mut file = catalog_get("sl2-borel").unwrap();
        file.modules.insert(
            "bad".into(),
            ModuleSpec { dim: 1, action: vec![vec![vec!["1".into()]], vec![vec!["0".into()]]] },
        );
        assert!(matches!(Problem::build(file), Err(Error::Validation { .. })));
        let p = Problem::build(catalog_get("sl2-borel").unwrap()).unwrap();
        assert!(matches!(p.module("nope"), Err(Error::MissingModule(_))));
        assert_eq!(p.module("n").unwrap().dim(), 1);
    }
}
