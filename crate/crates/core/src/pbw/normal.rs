//! Normal forms in `U(h⁽¹⁾) ⊗_{U(h)} V` and `U(g) ⊗_{U(h)} V`.
//!
//! Both spaces have a basis of `n`-words tensored with a basis of `V`: free
//! words on the first-order side (`F`), weakly increasing words on the
//! enveloping side (`R`). An element `y` of `g` acts by left multiplication,
//! computed recursively:
//!
//! - an `n` letter on `F` is prepended;
//! - an `n` letter `c` on `R` is prepended when `c <= c₁`, otherwise
//!   `c·c₁m = c₁·(c·m) + [c, c₁]·m`;
//! - an `h` letter `a` gives `a·c₁m = c₁·(a·m) + [a, c₁]·m`, and
//!   `a·(1 ⊗ v) = 1 ⊗ a·v`.
//!
//! Letters are indices in the adapted basis of the pair.

use std::collections::HashMap;
use std::sync::Arc;


use super::element::Combination;
use crate::error::Result;
use crate::lie::{InclusionPair, LieAlgebra, LieModule};
use crate::linalg::{Scalar, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Side {
    /// `U(h⁽¹⁾)/U(h⁽¹⁾)h`, free words.
    F,
    /// `U(g)/U(g)h`, ordered monomials.
    R,
}

/// Basis key: (word over `n` letters, basis index of `V`).
pub type Key = (Vec<usize>, usize);

#[derive(Clone, Debug)]
pub struct NormalForms {
    side: Side,
    adapted: Arc<LieAlgebra>,
    dh: usize,
    v: LieModule,
    cache: HashMap<(usize, Key), Combination<Key>>,
}

impl NormalForms {
    pub fn new(pair: &InclusionPair, side: Side, v: &LieModule) -> Result<Self> {
        pair.quotient_module().same_algebra(v)?;
        Ok(NormalForms { side, adapted: pair.adapted().clone(), dh: pair.dim_h(), v: v.clone(), cache: HashMap::new() })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn module(&self) -> &LieModule {
        &self.v
    }

    /// Left multiplication by an adapted letter on a basis element.
    pub fn left(&mut self, letter: usize, key: &Key) -> Combination<Key> {
        if let Some(hit) = self.cache.get(&(letter, key.clone())) {
            return hit.clone();
        }
        let out = self.left_uncached(letter, key);
        self.cache.insert((letter, key.clone()), out.clone());
        out
    }

    fn left_uncached(&mut self, letter: usize, key: &Key) -> Combination<Key> {
        let dh = self.dh;
        let (word, v) = key;
        if letter >= dh {
            let c = letter - dh;
            let prepend = match self.side {
                Side::F => true,
                Side::R => word.first().is_none_or(|&c1| c <= c1),
            };
            if prepend {
                let mut w = Vec::with_capacity(word.len() + 1);
                w.push(c);
                w.extend_from_slice(word);
                return Combination::single((w, *v));
            }
        } else if word.is_empty() {
            let act = self.v.action(letter);
            return (0..self.v.dim()).map(|r| ((Vec::new(), r), act.get(r, *v).clone())).collect();
        }
        let c1 = word[0];
        let rest: Key = (word[1..].to_vec(), *v);
        let inner = self.left(letter, &rest);
        let mut out = self.left_combination(dh + c1, &inner);
        let bracket = self.adapted.bracket_basis(letter, dh + c1).clone();
        let tail = self.left_vector(&bracket, &rest);
        out.add_scaled(&Scalar::from_integer(1.into()), &tail);
        out
    }

    pub fn left_combination(&mut self, letter: usize, x: &Combination<Key>) -> Combination<Key> {
        let mut out = Combination::new();
        for (k, c) in x.iter() {
            let y = self.left(letter, k);
            out.add_scaled(c, &y);
        }
        out
    }

    /// Left multiplication by `Σ y_i x_i` (adapted coordinates).
    pub fn left_vector(&mut self, y: &SparseVec, key: &Key) -> Combination<Key> {
        let mut out = Combination::new();
        for (i, c) in y.entries() {
            let z = self.left(*i, key);
            out.add_scaled(c, &z);
        }
        out
    }

    pub fn left_vector_combination(&mut self, y: &SparseVec, x: &Combination<Key>) -> Combination<Key> {
        let mut out = Combination::new();
        for (k, c) in x.iter() {
            let z = self.left_vector(y, k);
            out.add_scaled(c, &z);
        }
        out
    }

    /// Normal form of `y₁ ⋯ y_m ⊗ v` for adapted vectors `y_i`.
    pub fn word(&mut self, letters: &[SparseVec], v: usize) -> Combination<Key> {
        let mut acc = Combination::single((Vec::new(), v));
        for y in letters.iter().rev() {
            acc = self.left_vector_combination(y, &acc);
        }
        acc
    }

    /// Normal form of a word of adapted letters.
    pub fn letters(&mut self, letters: &[usize], v: usize) -> Combination<Key> {
        let mut acc = Combination::single((Vec::new(), v));
        for &y in letters.iter().rev() {
            acc = self.left_combination(y, &acc);
        }
        acc
    }

    /// `L_x L_y - L_y L_x - L_[x,y]` applied to `key`; zero when the
    /// defining relation holds there.
    pub fn relation_defect(&mut self, x: usize, y: usize, key: &Key) -> Combination<Key> {
        let yk = self.left(y, key);
        let mut out = self.left_combination(x, &yk);
        let xk = self.left(x, key);
        let yx = self.left_combination(y, &xk);
        out.add_scaled(&Scalar::from_integer((-1).into()), &yx);
        let b = self.adapted.bracket_basis(x, y).clone();
        let br = self.left_vector(&b, key);
        out.add_scaled(&Scalar::from_integer((-1).into()), &br);
        out
    }
}

fn strip(x: Combination<Key>) -> Combination<Vec<usize>> {
    x.map_keys(|(w, _)| w.clone())
}

fn g_letters(pair: &InclusionPair, word: &[usize]) -> Vec<SparseVec> {
    let binv = pair.adapted_change_of_basis();
    word.iter().map(|&i| SparseVec::from_dense(&binv.column(i))).collect()
}

/// Normal form in `U(h⁽¹⁾)/U(h⁽¹⁾)h` of a word in the original basis of `g`.
pub fn reduce_h1(pair: &InclusionPair, word: &[usize]) -> Combination<Vec<usize>> {
    let mut nf = NormalForms::new(pair, Side::F, &pair.trivial(1)).expect("same algebra");
    strip(nf.word(&g_letters(pair, word), 0))
}

/// Normal form in `U(g)/U(g)h` of a word in the original basis of `g`.
pub fn straighten_g(pair: &InclusionPair, word: &[usize]) -> Combination<Vec<usize>> {
    let mut nf = NormalForms::new(pair, Side::R, &pair.trivial(1)).expect("same algebra");
    strip(nf.word(&g_letters(pair, word), 0))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    fn borel() -> InclusionPair {
        InclusionPair::from_indices(LieAlgebra::sl2(), &[0, 1]).unwrap()
    }

    #[test]
    fn borel_straightening() {
        let p = borel();
        // g basis: e = 0, h = 1, f = 2
        assert!(straighten_g(&p, &[0]).is_zero());
        assert_eq!(straighten_g(&p, &[2]), Combination::single(vec![0]));
        assert!(straighten_g(&p, &[0, 2]).is_zero());
        assert_eq!(straighten_g(&p, &[]), Combination::single(vec![]));
        // e·f² = f·(e·f) + h·f = f h + (f h - 2 f) = -2 f in U(g)/U(g)h
        let x = straighten_g(&p, &[0, 2, 2]);
        assert_eq!(x, Combination::single(vec![0]).scale(&int(-2)));
    }

    #[test]
    fn borel_first_order_reduction() {
        let p = borel();
        assert_eq!(reduce_h1(&p, &[2, 2]), Combination::single(vec![0, 0]));
        assert!(reduce_h1(&p, &[0, 2]).is_zero());
        assert!(reduce_h1(&p, &[1]).is_zero());
        let x = reduce_h1(&p, &[0, 2, 2]);
        assert_eq!(x, Combination::single(vec![0]).scale(&int(-2)));
    }

    #[test]
    fn relations_hold_on_sl2_diagonal() {
        let p = InclusionPair::diagonal(&LieAlgebra::sl2()).unwrap();
        for side in [Side::F, Side::R] {
            let mut nf = NormalForms::new(&p, side, &p.trivial(1)).unwrap();
            for w in [vec![], vec![0], vec![2, 1], vec![0, 1, 2]] {
                let key = (w, 0);
                for x in 0..3 {
                    for y in 0..6 {
                        assert!(nf.relation_defect(x, y, &key).is_zero(), "{side:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn twisted_base_case_uses_module() {
        let p = borel();
        let n = p.quotient_module();
        let mut nf = NormalForms::new(&p, Side::R, &n).unwrap();
        // h·(1 ⊗ f̄) = 1 ⊗ (-2 f̄)
        let x = nf.left(1, &(vec![], 0));
        assert_eq!(x, Combination::single((vec![], 0)).scale(&int(-2)));
    }
}
