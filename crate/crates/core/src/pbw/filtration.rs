//! The degree filtrations `F^0 ⊂ F^1 ⊂ …` and `R^0 ⊂ R^1 ⊂ …`, truncated at
//! a maximal degree, with their `h`-actions.

use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use super::element::Combination;
use super::normal::{Key, NormalForms, Side};
use crate::error::{Error, Result};
use crate::lie::module::{sym_power_module, tensor_power_module, ModuleMap};
use crate::lie::tuples::{binomial, weakly_increasing, word_index, words};
use crate::lie::{InclusionPair, LieModule};
use crate::linalg::{Matrix, Scalar, SparseEchelon, SparseVec};

/// A filtered `h`-module truncated at degree `K`.
///
/// The basis is ordered by degree, then word, then `V` index, so each level
/// is spanned by a prefix of the basis.
#[derive(Clone, Debug)]
pub struct FilteredModule {
    side: Side,
    max_degree: usize,
    dim_n: usize,
    v_dim: usize,
    basis: Vec<Key>,
    index: HashMap<Key, usize>,
    level_dims: Vec<usize>,
    module: LieModule,
    relations_checked: usize,
}

/// `dim` of level `k`: `Σ_{i≤k} (dim n)^i · dim V` on the `F` side and
/// `Σ_{i≤k} C(dim n + i - 1, i) · dim V` on the `R` side.
pub fn expected_level_dim(side: Side, dim_n: usize, dim_v: usize, k: usize) -> usize {
    (0..=k).map(|i| graded_dim(side, dim_n, i)).sum::<usize>() * dim_v
}

fn graded_dim(side: Side, dim_n: usize, i: usize) -> usize {
    match side {
        Side::F => dim_n.pow(i as u32),
        Side::R => {
            if i == 0 {
                1
            } else {
                binomial(dim_n + i - 1, i)
            }
        }
    }
}

fn degree_words(side: Side, dim_n: usize, k: usize) -> Vec<Vec<usize>> {
    match side {
        Side::F => words(dim_n, k),
        Side::R => weakly_increasing(dim_n, k),
    }
}

/// Builds the filtration up to degree `max_degree` with coefficients in `v`
/// (the trivial one-dimensional module when `None`).
///
/// The normal forms are validated by checking the defining relations
/// `[L_x, L_y] = L_[x,y]` on every basis element of degree below
/// `max_degree` (with `x ∈ h` on the `F` side); a failure is reported as
/// [`Error::Rewriting`].
pub fn build_filtration(
    pair: &InclusionPair,
    side: Side,
    max_degree: usize,
    v: Option<&LieModule>,
) -> Result<FilteredModule> {
    let v = v.cloned().unwrap_or_else(|| pair.trivial(1));
    let mut nf = NormalForms::new(pair, side, &v)?;
    let (dh, dg, dn, dv) = (pair.dim_h(), pair.dim_g(), pair.dim_n(), v.dim());
    let mut basis = Vec::new();
    let mut level_dims = Vec::new();
    for k in 0..=max_degree {
        for w in degree_words(side, dn, k) {
            for i in 0..dv {
                basis.push((w.clone(), i));
            }
        }
        level_dims.push(basis.len());
    }
    let index: HashMap<Key, usize> = basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    let dim = basis.len();

    let mut action = Vec::with_capacity(dh);
    for a in 0..dh {
        let mut m = Matrix::zeros(dim, dim);
        for (j, key) in basis.iter().enumerate() {
            for (k, x) in nf.left(a, key).iter() {
                let r = *index
                    .get(k)
                    .ok_or_else(|| Error::Rewriting(format!("h acting on {key:?} produced {k:?} outside the basis")))?;
                m.set(r, j, x.clone());
            }
        }
        action.push(m);
    }

    let mut checked = 0;
    let below = if max_degree == 0 { 0 } else { level_dims[max_degree - 1] };
    for key in &basis[..below] {
        for x in 0..dg {
            let ys: Vec<usize> = match side {
                Side::F if x < dh => (0..dg).collect(),
                Side::F => Vec::new(),
                Side::R => (x + 1..dg).collect(),
            };
            for y in ys {
                let defect = nf.relation_defect(x, y, key);
                if !defect.is_zero() {
                    let labels = pair.adapted().labels();
                    return Err(Error::Rewriting(format!(
                        "relation for ({}, {}) fails on {key:?}",
                        labels[x], labels[y]
                    )));
                }
                checked += 1;
            }
        }
    }

    let module = LieModule::new(pair.h().clone(), dim, action)?;
    Ok(FilteredModule { side, max_degree, dim_n: dn, v_dim: dv, basis, index, level_dims, module, relations_checked: checked })
}

impl FilteredModule {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn dim_v(&self) -> usize {
        self.v_dim
    }

    pub fn basis(&self) -> &[Key] {
        &self.basis
    }

    pub fn index_of(&self, key: &Key) -> Option<usize> {
        self.index.get(key).copied()
    }

    /// The module `F^K` (or `R^K`).
    pub fn module(&self) -> &LieModule {
        &self.module
    }

    pub fn level_dim(&self, k: usize) -> usize {
        self.level_dims[k]
    }

    pub fn relations_checked(&self) -> usize {
        self.relations_checked
    }

    /// First basis index of degree `k`.
    pub fn degree_start(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.level_dims[k - 1]
        }
    }

    pub fn level(&self, k: usize) -> LieModule {
        self.module.prefix_submodule(self.level_dims[k]).expect("levels are submodules")
    }

    /// Level `k` modulo `F^0`.
    pub fn reduced_level(&self, k: usize) -> LieModule {
        self.level(k).prefix_quotient(self.level_dims[0]).expect("F^0 is a submodule")
    }

    /// `F^k / F^{k-1}`.
    pub fn graded(&self, k: usize) -> LieModule {
        self.level(k).prefix_quotient(self.degree_start(k)).expect("levels are submodules")
    }

    /// Coordinates of an element of the truncated module.
    pub fn coordinates(&self, x: &Combination<Key>) -> Result<Vec<Scalar>> {
        let mut v = vec![Scalar::zero(); self.basis.len()];
        for (k, c) in x.iter() {
            let i = self
                .index_of(k)
                .ok_or_else(|| Error::Rewriting(format!("{k:?} lies above degree {}", self.max_degree)))?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    /// `0 -> level k-1 -> level k -> gr_k -> 0`, optionally modulo `F^0`.
    pub fn level_sequence(&self, k: usize, reduced: bool) -> Result<(ModuleMap, ModuleMap)> {
        if k == 0 || k > self.max_degree {
            return Err(Error::DimensionMismatch(format!("no level sequence at degree {k}")));
        }
        let (b, a) = if reduced {
            (self.reduced_level(k), self.reduced_level(k - 1))
        } else {
            (self.level(k), self.level(k - 1))
        };
        let c = self.graded(k);
        let one = Scalar::from_integer(1.into());
        let incl = Matrix::from_fn(b.dim(), a.dim(), |r, col| if r == col { one.clone() } else { Scalar::zero() });
        let off = a.dim();
        let proj = Matrix::from_fn(c.dim(), b.dim(), |r, col| if col == off + r { one.clone() } else { Scalar::zero() });
        Ok((ModuleMap::new(a, b.clone(), incl)?, ModuleMap::new(b, c, proj)?))
    }

    /// `(k, computed, predicted)` for every level.
    pub fn dimension_table(&self) -> Vec<(usize, usize, usize)> {
        (0..=self.max_degree)
            .map(|k| (k, self.level_dims[k], expected_level_dim(self.side, self.dim_n, self.v_dim, k)))
            .collect()
    }

    pub fn dimensions_match(&self) -> bool {
        self.dimension_table().iter().all(|(_, a, b)| a == b)
    }
}

/// Result of comparing `gr_k` with `n^{⊗k}` (resp. `S^k n`).
#[derive(Clone, Debug, Serialize)]
pub struct GrReport {
    pub side: Side,
    pub degree: usize,
    /// The canonical map `n^{⊗k} -> gr_k` is equivariant.
    pub equivariant: bool,
    /// Its rank equals `dim gr_k` (it is onto).
    pub surjective: bool,
    pub kernel_dim: usize,
    /// On `R`: the kernel is spanned by the commutators
    /// `…⊗(x⊗y - y⊗x)⊗…`; on `F`: the kernel is zero.
    pub kernel_as_predicted: bool,
    /// The identification with `n^{⊗k}` or `S^k n` on the chosen bases is
    /// an equivariant isomorphism.
    pub isomorphism: bool,
}

impl GrReport {
    pub fn passed(&self) -> bool {
        self.equivariant && self.surjective && self.kernel_as_predicted && self.isomorphism
    }
}

/// Checks `gr_k F = n^{⊗k}` or `gr_k R = S^k n` (trivial coefficients).
pub fn gr_check(pair: &InclusionPair, filtration: &FilteredModule, k: usize) -> Result<GrReport> {
    if filtration.dim_v() != 1 || k > filtration.max_degree() {
        return Err(Error::DimensionMismatch("gr check needs trivial coefficients and k within range".into()));
    }
    let side = filtration.side();
    let n = pair.quotient_module();
    let dn = n.dim();
    let (dh, start) = (pair.dim_h(), filtration.degree_start(k));
    let gr = filtration.graded(k);
    let tensor = tensor_power_module(&n, k);
    let mut nf = NormalForms::new(pair, side, &pair.trivial(1))?;

    let tensor_words = words(dn, k);
    let mut tau = Matrix::zeros(gr.dim(), tensor_words.len());
    for (j, w) in tensor_words.iter().enumerate() {
        let letters: Vec<usize> = w.iter().map(|c| dh + c).collect();
        let x = filtration.coordinates(&nf.letters(&letters, 0))?;
        for r in 0..gr.dim() {
            tau.set(r, j, x[start + r].clone());
        }
    }
    let tau_map = ModuleMap::new(tensor.clone(), gr.clone(), tau.clone())?;
    let equivariant = tau_map.is_equivariant();
    let rank = tau.rank();
    let surjective = rank == gr.dim();
    let kernel_dim = tensor_words.len() - rank;

    let kernel_as_predicted = match side {
        Side::F => kernel_dim == 0,
        Side::R => {
            let mut span = SparseEchelon::new();
            if k >= 2 {
                for w in &tensor_words {
                    for i in 0..k - 1 {
                        let mut swapped = w.clone();
                        swapped.swap(i, i + 1);
                        let v = SparseVec::from_pairs([
                            (word_index(dn, w), Scalar::from_integer(1.into())),
                            (word_index(dn, &swapped), Scalar::from_integer((-1).into())),
                        ]);
                        span.insert(&v);
                    }
                }
            }
            // The commutators span a space of the right size and τ kills them.
            span.rank() == kernel_dim && commutators_in_kernel(&tau, dn, k)
        }
    };

    let identification = match side {
        Side::F => tensor,
        Side::R => sym_power_module(&n, k),
    };
    let isomorphism = identification.dim() == gr.dim()
        && ModuleMap::new(identification, gr.clone(), Matrix::identity(gr.dim()))?.is_equivariant();
    Ok(GrReport { side, degree: k, equivariant, surjective, kernel_dim, kernel_as_predicted, isomorphism })
}

fn commutators_in_kernel(tau: &Matrix, dn: usize, k: usize) -> bool {
    if k < 2 {
        return true;
    }
    words(dn, k).iter().all(|w| {
        (0..k - 1).all(|i| {
            let mut s = w.clone();
            s.swap(i, i + 1);
            let (a, b) = (word_index(dn, w), word_index(dn, &s));
            (0..tau.rows()).all(|r| tau.get(r, a) == tau.get(r, b))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieAlgebra;

    fn borel() -> InclusionPair {
        InclusionPair::from_indices(LieAlgebra::sl2(), &[0, 1]).unwrap()
    }

    #[test]
    fn borel_dimensions() {
        let p = borel();
        for side in [Side::F, Side::R] {
            let f = build_filtration(&p, side, 4, None).unwrap();
            for k in 0..=4 {
                assert_eq!(f.level_dim(k), k + 1);
            }
            assert!(f.dimensions_match());
            assert!(f.module().is_valid());
        }
    }

    #[test]
    fn diagonal_dimensions() {
        let p = InclusionPair::diagonal(&LieAlgebra::sl2()).unwrap();
        let r = build_filtration(&p, Side::R, 3, None).unwrap();
        assert_eq!((0..=3).map(|k| r.level_dim(k)).collect::<Vec<_>>(), vec![1, 4, 10, 20]);
        let f = build_filtration(&p, Side::F, 3, None).unwrap();
        assert_eq!((0..=3).map(|k| f.level_dim(k)).collect::<Vec<_>>(), vec![1, 4, 13, 40]);
        assert!(r.module().is_valid() && f.module().is_valid());
    }

    #[test]
    fn twisted_dimensions() {
        let p = borel();
        let n = p.quotient_module();
        let f = build_filtration(&p, Side::F, 3, Some(&n)).unwrap();
        assert!(f.dimensions_match());
        assert!(f.module().is_valid());
        let ad = p.h_adjoint();
        let r = build_filtration(&p, Side::R, 3, Some(&ad)).unwrap();
        assert_eq!(r.level_dim(3), 8);
        assert!(r.module().is_valid());
    }

    #[test]
    fn gr_checks_pass() {
        for p in [borel(), InclusionPair::diagonal(&LieAlgebra::sl2()).unwrap()] {
            for side in [Side::F, Side::R] {
                let f = build_filtration(&p, side, 3, None).unwrap();
                for k in 0..=3 {
                    let rep = gr_check(&p, &f, k).unwrap();
                    assert!(rep.passed(), "{side:?} {k}: {rep:?}");
                }
            }
        }
    }

    #[test]
    fn r_kernel_in_degree_two_is_commutators() {
        let p = InclusionPair::diagonal(&LieAlgebra::heisenberg()).unwrap();
        let r = build_filtration(&p, Side::R, 2, None).unwrap();
        let rep = gr_check(&p, &r, 2).unwrap();
        assert_eq!(rep.kernel_dim, 3);
        assert!(rep.kernel_as_predicted);
    }

    #[test]
    fn level_sequences_are_exact() {
        let p = borel();
        let f = build_filtration(&p, Side::F, 3, None).unwrap();
        for k in 1..=3 {
            for reduced in [false, true] {
                let (i, q) = f.level_sequence(k, reduced).unwrap();
                assert!(i.is_equivariant() && q.is_equivariant());
                assert!((&q.matrix * &i.matrix).is_zero());
            }
        }
    }
}
