//! The maps `t_k`, the splittings `s_k` of the `F` filtration, and the
//! splitting `I` of the `R` filtration.
//!
//! An [`InducedElement`] is an element of `U(h⁽¹⁾) ⊗_{U(h)} n^{⊗j}` written
//! with free `n`-words on the left. Words act on `n̄` through the extension
//! datum `ρ`: `y₁⋯y_r · y = ρ(y₁)(ρ(y₂)(⋯ρ(y_r) y))`.

use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use super::element::{Combination, FreeWordElement, InducedElement};
use super::filtration::{build_filtration, FilteredModule};
use super::hopf::{antipode_word, coproduct_word};
use super::normal::{NormalForms, Side};
use crate::cohomology::ExtensionDatum;
use crate::error::{Error, Result};
use crate::lie::module::{sym_power_module, tensor_power_module, ModuleMap};
use crate::lie::tuples::{permutations, weakly_increasing, words};
use crate::lie::InclusionPair;
use crate::linalg::scalar::{factorial, int};
use crate::linalg::{Matrix, Scalar};

/// Evaluates the `t` maps with memoisation.
#[derive(Clone, Debug)]
pub struct TMaps {
    rho: Vec<Matrix>,
    dim_n: usize,
    cache: HashMap<(Vec<usize>, Vec<usize>), InducedElement>,
}

impl TMaps {
    /// `datum` must extend the action on `n` itself.
    pub fn new(datum: &ExtensionDatum) -> Result<Self> {
        let dn = datum.pair().dim_n();
        if datum.module().dim() != dn || datum.module().actions() != datum.pair().quotient_module().actions() {
            return Err(Error::InvalidExtension("the t maps need an extension of the action on n".into()));
        }
        let rho = (0..dn).map(|c| datum.rho_n(c).clone()).collect();
        Ok(TMaps { rho, dim_n: dn, cache: HashMap::new() })
    }

    /// `y₁⋯y_r · v`.
    pub fn act_word(&self, word: &[usize], v: &[Scalar]) -> Vec<Scalar> {
        word.iter().rev().fold(v.to_vec(), |acc, &y| self.rho[y].apply(&acc))
    }

    /// `S(y₁⋯y_r) · v = (-1)^r ρ(y_r)⋯ρ(y₁) v`, with `y₁` applied first.
    pub fn act_antipode(&self, word: &[usize], v: &[Scalar]) -> Vec<Scalar> {
        let (sign, reversed) = antipode_word(word);
        self.act_word(&reversed, v).iter().map(|x| x * int(sign)).collect()
    }

    fn unit(&self, d: usize) -> Vec<Scalar> {
        (0..self.dim_n).map(|i| if i == d { int(1) } else { Scalar::zero() }).collect()
    }

    /// `t_k` on a basis element `w ⊗ x`, `k = x.len() ≥ 1`.
    ///
    /// `t₁(w ⊗ x) = wx ⊗ 1`, and `t_{k+1} = φ ∘ (t_k ⊗ id) ∘ ψ` with
    /// `ψ(w ⊗ (x ⊗ y)) = w⁽¹⁾ ⊗ x ⊗ w⁽²⁾y` and
    /// `φ((u ⊗ x') ⊗ y') = u⁽¹⁾ ⊗ (x' ⊗ S(u⁽²⁾)y')`.
    pub fn t_basis(&mut self, word: &[usize], tensor: &[usize]) -> InducedElement {
        assert!(!tensor.is_empty(), "t is defined on n^{{⊗k}} with k ≥ 1");
        let key = (word.to_vec(), tensor.to_vec());
        if let Some(hit) = self.cache.get(&key) {
            return hit.clone();
        }
        let k = tensor.len();
        let mut out = InducedElement::new();
        if k == 1 {
            let mut w = word.to_vec();
            w.push(tensor[0]);
            out.add_term((w, Vec::new()), int(1));
        } else {
            let (x, y) = (&tensor[..k - 1], tensor[k - 1]);
            for (ws, wc) in coproduct_word(word) {
                let yv = self.act_word(&wc, &self.unit(y));
                if yv.iter().all(Zero::is_zero) {
                    continue;
                }
                let inner = self.t_basis(&ws, x);
                for ((u, xp), coef) in inner.iter() {
                    for (u1, u2) in coproduct_word(u) {
                        let z = self.act_antipode(&u2, &yv);
                        for (d, zd) in z.iter().enumerate() {
                            if zd.is_zero() {
                                continue;
                            }
                            let mut t = xp.clone();
                            t.push(d);
                            out.add_term((u1.clone(), t), coef * zd);
                        }
                    }
                }
            }
        }
        self.cache.insert(key, out.clone());
        out
    }

    /// `t_k` extended linearly; all terms must carry tensors of one length.
    pub fn t_map(&mut self, e: &InducedElement) -> InducedElement {
        let mut out = InducedElement::new();
        for ((w, x), c) in e.iter() {
            let y = self.t_basis(w, x);
            out.add_scaled(c, &y);
        }
        out
    }

    /// `s_k(x₁⊗⋯⊗x_k) = t₁ ∘ ⋯ ∘ t_k (1 ⊗ x)`.
    pub fn s_basis(&mut self, tensor: &[usize]) -> FreeWordElement {
        let mut e = InducedElement::single((Vec::new(), tensor.to_vec()));
        for _ in 0..tensor.len() {
            e = self.t_map(&e);
        }
        e.map_keys(|(w, _)| w.clone())
    }
}

/// Longest word occurring in an induced element.
pub fn filtration_degree(e: &InducedElement) -> Option<usize> {
    e.iter().map(|((w, _), _)| w.len()).max()
}

/// Closed form of `s₂`: `x₁x₂ - ρ(x₁)x₂`.
pub fn s2_closed_form(datum: &ExtensionDatum, x1: usize, x2: usize) -> FreeWordElement {
    let dn = datum.pair().dim_n();
    let rho = |c: usize| datum.rho_n(c).clone();
    let mut out = FreeWordElement::single(vec![x1, x2]);
    for d in 0..dn {
        out.add_term(vec![d], -rho(x1).get(d, x2).clone());
    }
    out
}

/// Closed form of `s₃`:
/// `x₁x₂x₃ - x₁·ρ(x₂)x₃ - x₂·ρ(x₁)x₃ + ρ(x₂)ρ(x₁)x₃ - (ρ(x₁)x₂)·x₃ + ρ(ρ(x₁)x₂)x₃`.
pub fn s3_closed_form(datum: &ExtensionDatum, x1: usize, x2: usize, x3: usize) -> FreeWordElement {
    let dn = datum.pair().dim_n();
    let rho = |c: usize| datum.rho_n(c).clone();
    let col = |m: &Matrix, c: usize| m.column(c);
    let mut out = FreeWordElement::single(vec![x1, x2, x3]);
    let r2x3 = col(&rho(x2), x3);
    let r1x3 = col(&rho(x1), x3);
    let r1x2 = col(&rho(x1), x2);
    let r2r1x3 = rho(x2).apply(&r1x3);
    let mut rr = vec![Scalar::zero(); dn];
    for (c, coef) in r1x2.iter().enumerate() {
        if !coef.is_zero() {
            for (d, v) in col(&rho(c), x3).iter().enumerate() {
                rr[d] += coef * v;
            }
        }
    }
    for d in 0..dn {
        out.add_term(vec![x1, d], -r2x3[d].clone());
        out.add_term(vec![x2, d], -r1x3[d].clone());
        out.add_term(vec![d], r2r1x3[d].clone());
        out.add_term(vec![d, x3], -r1x2[d].clone());
        out.add_term(vec![d], rr[d].clone());
    }
    out
}

/// Compares `s₂` and `s₃` from the recursion with their closed forms on
/// every basis tensor. Returns the number of tensors compared and those
/// that disagree.
pub fn closed_form_mismatches(datum: &ExtensionDatum) -> Result<(usize, Vec<Vec<usize>>)> {
    let mut tmaps = TMaps::new(datum)?;
    let dn = datum.pair().dim_n();
    let mut checked = 0;
    let mut bad = Vec::new();
    for t in words(dn, 2).into_iter().chain(words(dn, 3)) {
        let expected = match t[..] {
            [a, b] => s2_closed_form(datum, a, b),
            [a, b, c] => s3_closed_form(datum, a, b, c),
            _ => unreachable!(),
        };
        checked += 1;
        if tmaps.s_basis(&t) != expected {
            bad.push(t);
        }
    }
    Ok((checked, bad))
}

/// A constructed map together with the outcome of its checks.
#[derive(Clone, Debug)]
pub struct VerifiedMap {
    pub degree: usize,
    pub map: ModuleMap,
    pub equivariant: bool,
    /// Composing with the projection to the top degree gives the identity.
    pub section: bool,
}

impl VerifiedMap {
    pub fn passed(&self) -> bool {
        self.equivariant && self.section
    }
}

/// Summary of a [`VerifiedMap`] for reports.
#[derive(Clone, Debug, Serialize)]
pub struct MapSummary {
    pub degree: usize,
    pub rows: usize,
    pub cols: usize,
    pub equivariant: bool,
    pub section: bool,
}

impl From<&VerifiedMap> for MapSummary {
    fn from(v: &VerifiedMap) -> Self {
        MapSummary {
            degree: v.degree,
            rows: v.map.matrix.rows(),
            cols: v.map.matrix.cols(),
            equivariant: v.equivariant,
            section: v.section,
        }
    }
}

fn top_block_is_identity(m: &Matrix, start: usize) -> bool {
    let cols = m.cols();
    m.rows() == start + cols && m.block(start, start + cols, 0, cols) == Matrix::identity(cols)
}

/// `s_k: n^{⊗k} -> F^k` as a matrix in the basis of `f` (trivial
/// coefficients), with its checks.
pub fn splitting_s_in(f: &FilteredModule, tmaps: &mut TMaps, k: usize) -> Result<VerifiedMap> {
    if f.side() != Side::F || f.dim_v() != 1 || k > f.max_degree() || f.max_degree() == 0 {
        return Err(Error::DimensionMismatch("s_k needs the F filtration with trivial coefficients".into()));
    }
    let dn = tmaps.dim_n;
    let level = f.level(k);
    let source = tensor_power_module(&f.graded(1), k);
    let tensors = words(dn, k);
    let mut m = Matrix::zeros(level.dim(), tensors.len());
    for (j, t) in tensors.iter().enumerate() {
        let s = tmaps.s_basis(t);
        let coords = f.coordinates(&s.map_keys(|w| (w.clone(), 0)))?;
        for r in 0..level.dim() {
            m.set(r, j, coords[r].clone());
        }
    }
    let map = ModuleMap::new(source, level, m)?;
    let equivariant = map.is_equivariant();
    let section = top_block_is_identity(&map.matrix, f.degree_start(k));
    Ok(VerifiedMap { degree: k, map, equivariant, section })
}

/// `s_k` for the pair, building `F` up to degree `k`.
pub fn splitting_s(pair: &InclusionPair, datum: &ExtensionDatum, k: usize) -> Result<VerifiedMap> {
    let f = build_filtration(pair, Side::F, k.max(1), None)?;
    let mut tmaps = TMaps::new(datum)?;
    splitting_s_in(&f, &mut tmaps, k)
}

/// Matrix of the canonical map `F^k -> R^k` (reinterpret a free word as an
/// element of `U(g)` and straighten).
pub fn canonical_f_to_r(pair: &InclusionPair, f: &FilteredModule, r: &FilteredModule, k: usize) -> Result<Matrix> {
    let mut nf = NormalForms::new(pair, Side::R, &pair.trivial(1))?;
    let dh = pair.dim_h();
    let (rows, cols) = (r.level_dim(k), f.level_dim(k));
    let mut m = Matrix::zeros(rows, cols);
    for (j, (w, _)) in f.basis()[..cols].iter().enumerate() {
        let letters: Vec<usize> = w.iter().map(|c| dh + c).collect();
        let x = r.coordinates(&nf.letters(&letters, 0))?;
        for i in 0..rows {
            m.set(i, j, x[i].clone());
        }
    }
    Ok(m)
}

/// `I_k: S^k n -> R^k` for `k ≤ K`: symmetrise (`1/k!` times the sum over
/// orderings), apply `s_k`, map to `R^k`.
pub fn pbw_splitting_i(pair: &InclusionPair, datum: &ExtensionDatum, max_degree: usize) -> Result<Vec<VerifiedMap>> {
    let r = build_filtration(pair, Side::R, max_degree, None)?;
    let mut tmaps = TMaps::new(datum)?;
    let mut nf = NormalForms::new(pair, Side::R, &pair.trivial(1))?;
    let (dh, dn) = (pair.dim_h(), pair.dim_n());
    let n = r.graded(1);
    let mut out = Vec::new();
    for k in 0..=max_degree {
        let level = r.level(k);
        let monomials = weakly_increasing(dn, k);
        let perms = permutations(k);
        let weight = Scalar::from_integer(1.into()) / factorial(k);
        let mut m = Matrix::zeros(level.dim(), monomials.len());
        for (j, mono) in monomials.iter().enumerate() {
            let mut words_sum = FreeWordElement::new();
            for (_, p) in &perms {
                let t: Vec<usize> = p.iter().map(|&i| mono[i]).collect();
                let s = tmaps.s_basis(&t);
                words_sum.add_scaled(&weight, &s);
            }
            let mut image = Combination::new();
            for (w, c) in words_sum.iter() {
                let letters: Vec<usize> = w.iter().map(|x| dh + x).collect();
                let y = nf.letters(&letters, 0);
                image.add_scaled(c, &y);
            }
            let coords = r.coordinates(&image)?;
            for i in 0..level.dim() {
                m.set(i, j, coords[i].clone());
            }
        }
        let map = ModuleMap::new(sym_power_module(&n, k), level, m)?;
        let equivariant = map.is_equivariant();
        let section = top_block_is_identity(&map.matrix, r.degree_start(k));
        out.push(VerifiedMap { degree: k, map, equivariant, section });
    }
    Ok(out)
}
