//! Finite-dimensional modules given by action matrices, and the standard
//! constructions on them.
//!
//! Basis conventions (every downstream matrix depends on them):
//! - `M ⊗ N`: `(i, j) -> i * dim N + j`;
//! - `Hom(M, N)`: a map is an `dim N x dim M` matrix `φ`, flattened row-major,
//!   so `Hom(M, N) = N ⊗ M*` in the tensor order;
//! - `S^k M` / `Λ^k M`: weakly / strictly increasing index tuples in
//!   lexicographic order.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use super::algebra::LieAlgebra;
use super::tuples::{sort_with_sign, strictly_increasing, weakly_increasing};
use crate::error::{Error, Result};
use crate::linalg::scalar::int;
use crate::linalg::{Matrix, Scalar};

#[derive(Clone, Debug)]
pub struct LieModule {
    algebra: Arc<LieAlgebra>,
    dim: usize,
    action: Vec<Matrix>,
}

impl LieModule {
    pub fn new(algebra: Arc<LieAlgebra>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        if let Some(i) = action.iter().position(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch(format!("action matrix {i} is not {dim}x{dim}")));
        }
        Ok(LieModule { algebra, dim, action })
    }

    pub fn trivial(algebra: Arc<LieAlgebra>, dim: usize) -> Self {
        let action = vec![Matrix::zeros(dim, dim); algebra.dim()];
        LieModule { algebra, dim, action }
    }

    pub fn adjoint(algebra: Arc<LieAlgebra>) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.ad(i)).collect();
        LieModule { dim: algebra.dim(), algebra, action }
    }

    pub fn zero(algebra: Arc<LieAlgebra>) -> Self {
        Self::trivial(algebra, 0)
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Action of the algebra element with coordinates `x`.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &self.action[i].scale(c);
            }
        }
        out
    }

    /// Basis pairs `(i, j)` with `act([x_i, x_j]) != [act x_i, act x_j]`.
    pub fn violations(&self) -> Vec<(usize, usize)> {
        let n = self.algebra.dim();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.act(&self.algebra.bracket_basis(i, j).to_dense(n));
                if lhs != self.action[i].commutator(&self.action[j]) {
                    bad.push((i, j));
                }
            }
        }
        bad
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    pub fn same_algebra(&self, other: &LieModule) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Submodule spanned by the first `k` basis vectors; errors if that span
    /// is not invariant.
    pub fn prefix_submodule(&self, k: usize) -> Result<LieModule> {
        for (i, m) in self.action.iter().enumerate() {
            for r in k..self.dim {
                for c in 0..k {
                    if !m.get(r, c).is_zero() {
                        return Err(Error::DimensionMismatch(format!(
                            "first {k} basis vectors are not invariant under generator {i}"
                        )));
                    }
                }
            }
        }
        let action = self.action.iter().map(|m| m.block(0, k, 0, k)).collect();
        Ok(LieModule { algebra: self.algebra.clone(), dim: k, action })
    }

    /// Quotient by the invariant span of the first `k` basis vectors.
    pub fn prefix_quotient(&self, k: usize) -> Result<LieModule> {
        self.prefix_submodule(k)?;
        let action = self.action.iter().map(|m| m.block(k, self.dim, k, self.dim)).collect();
        Ok(LieModule { algebra: self.algebra.clone(), dim: self.dim - k, action })
    }
}

pub fn tensor_module(m: &LieModule, n: &LieModule) -> Result<LieModule> {
    m.same_algebra(n)?;
    let (im, in_) = (Matrix::identity(m.dim), Matrix::identity(n.dim));
    let action = m.action.iter().zip(&n.action).map(|(a, b)| &a.kron(&in_) + &im.kron(b)).collect();
    Ok(LieModule { algebra: m.algebra.clone(), dim: m.dim * n.dim, action })
}

/// `M^{⊗k}`; `k = 0` gives the one-dimensional trivial module.
pub fn tensor_power_module(m: &LieModule, k: usize) -> LieModule {
    let mut out = LieModule::trivial(m.algebra.clone(), 1);
    for _ in 0..k {
        out = tensor_module(&out, m).expect("same algebra");
    }
    out
}

/// `Hom(M, N)` with `(x·φ) = act_N(x) ∘ φ - φ ∘ act_M(x)`.
pub fn hom_module(m: &LieModule, n: &LieModule) -> Result<LieModule> {
    m.same_algebra(n)?;
    let (im, in_) = (Matrix::identity(m.dim), Matrix::identity(n.dim));
    let action = m
        .action
        .iter()
        .zip(&n.action)
        .map(|(am, an)| &an.kron(&im) - &in_.kron(&am.transpose()))
        .collect();
    Ok(LieModule { algebra: m.algebra.clone(), dim: m.dim * n.dim, action })
}

pub fn dual_module(m: &LieModule) -> LieModule {
    hom_module(m, &LieModule::trivial(m.algebra.clone(), 1)).expect("same algebra")
}

pub fn direct_sum_module(m: &LieModule, n: &LieModule) -> Result<LieModule> {
    m.same_algebra(n)?;
    let d = m.dim + n.dim;
    let action = m
        .action
        .iter()
        .zip(&n.action)
        .map(|(a, b)| {
            Matrix::from_fn(d, d, |r, c| match (r < m.dim, c < m.dim) {
                (true, true) => a.get(r, c).clone(),
                (false, false) => b.get(r - m.dim, c - m.dim).clone(),
                _ => Scalar::zero(),
            })
        })
        .collect();
    Ok(LieModule { algebra: m.algebra.clone(), dim: d, action })
}

/// Derivation action on the monomial basis of `S^k M`.
pub fn sym_power_module(m: &LieModule, k: usize) -> LieModule {
    let basis = weakly_increasing(m.dim, k);
    let index: HashMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let action = m
        .action
        .iter()
        .map(|a| {
            let mut out = Matrix::zeros(basis.len(), basis.len());
            for (col, t) in basis.iter().enumerate() {
                for j in 0..k {
                    for r in 0..m.dim {
                        let x = a.get(r, t[j]);
                        if x.is_zero() {
                            continue;
                        }
                        let mut t2 = t.clone();
                        t2[j] = r;
                        t2.sort_unstable();
                        out.add_at(index[&t2], col, x);
                    }
                }
            }
            out
        })
        .collect();
    LieModule { algebra: m.algebra.clone(), dim: basis.len(), action }
}

/// Derivation action on the basis `e_{t1} ∧ ... ∧ e_{tk}` of `Λ^k M`.
pub fn ext_power_module(m: &LieModule, k: usize) -> LieModule {
    let basis = strictly_increasing(m.dim, k);
    let index: HashMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let action = m
        .action
        .iter()
        .map(|a| {
            let mut out = Matrix::zeros(basis.len(), basis.len());
            for (col, t) in basis.iter().enumerate() {
                for j in 0..k {
                    for r in 0..m.dim {
                        let x = a.get(r, t[j]);
                        if x.is_zero() {
                            continue;
                        }
                        let mut t2 = t.clone();
                        t2[j] = r;
                        if let Some((sign, sorted)) = sort_with_sign(&t2) {
                            out.add_at(index[&sorted], col, &(x * int(sign)));
                        }
                    }
                }
            }
            out
        })
        .collect();
    LieModule { algebra: m.algebra.clone(), dim: basis.len(), action }
}

/// A linear map between modules, expected to be equivariant.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: LieModule,
    pub target: LieModule,
    pub matrix: Matrix,
}

impl ModuleMap {
    pub fn new(source: LieModule, target: LieModule, matrix: Matrix) -> Result<Self> {
        source.same_algebra(&target)?;
        if matrix.rows() != target.dim || matrix.cols() != source.dim {
            return Err(Error::DimensionMismatch(format!(
                "map is {}x{}, modules have dimensions {} -> {}",
                matrix.rows(),
                matrix.cols(),
                source.dim,
                target.dim
            )));
        }
        Ok(ModuleMap { source, target, matrix })
    }

    /// Generators `x` with `matrix ∘ act_source(x) != act_target(x) ∘ matrix`.
    pub fn equivariance_failures(&self) -> Vec<usize> {
        (0..self.source.algebra.dim())
            .filter(|&i| &self.matrix * self.source.action(i) != self.target.action(i) * &self.matrix)
            .collect()
    }

    pub fn is_equivariant(&self) -> bool {
        self.equivariance_failures().is_empty()
    }
}

/// Basis of the space of equivariant maps `M -> N` (as `dim N x dim M`
/// matrices).
pub fn intertwiner_basis(m: &LieModule, n: &LieModule) -> Result<Vec<Matrix>> {
    let hom = hom_module(m, n)?;
    let stacked = hom
        .action
        .iter()
        .fold(Matrix::zeros(0, hom.dim), |acc, a| acc.vstack(a));
    Ok(stacked
        .kernel_basis()
        .into_iter()
        .map(|v| Matrix::from_fn(n.dim, m.dim, |r, c| v[r * m.dim + c].clone()))
        .collect())
}
