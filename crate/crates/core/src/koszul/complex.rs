//! Bounded-degree slices of the Koszul complex `qA ⊗ K̃^•`.
//!
//! Indexing is homological: position `i` of the slice of internal degree
//! `d` is `qA_{d-i} ⊗ K̃^i` and the differential lowers `i`. The rightmost
//! term is `qA_d` at `i = 0`.

use serde::Serialize;

use super::quadratic::{QaDegree, QuadraticData};
use crate::lie::tuples::{binomial, permutations, strictly_increasing};
use crate::lie::InclusionPair;
use crate::linalg::scalar::{int, one};
use crate::linalg::sparse::sparse_rank;
use crate::linalg::{SparseEchelon, SparseVec};

/// Basis of `K̃^i = (∧^{i-1} h) ∧ g ⊂ g^{⊗i}`: the image of the total
/// antisymmetrization of `h^{⊗(i-1)} ⊗ g`. `K̃^0` is the ground field.
pub fn k_tilde_basis(pair: &InclusionPair, i: usize) -> Vec<SparseVec> {
    let (dg, dh) = (pair.dim_g(), pair.dim_h());
    if i == 0 {
        return vec![SparseVec::from_pairs([(0, one())])];
    }
    let perms = permutations(i);
    let mut span = SparseEchelon::new();
    let mut basis = Vec::new();
    for hs in strictly_increasing(dh, i - 1) {
        for x in 0..dg {
            let mut letters = hs.clone();
            letters.push(x);
            let v = SparseVec::from_pairs(perms.iter().map(|(sign, p)| {
                let idx = p.iter().fold(0, |acc, &j| acc * dg + letters[j]);
                (idx, int(*sign))
            }));
            if !v.is_zero() && span.insert(&v) {
                basis.push(v);
            }
        }
    }
    basis
}

/// `dim ∧^i h + dim ∧^{i-1} h · dim n`.
pub fn k_tilde_expected_dim(dim_h: usize, dim_n: usize, i: usize) -> usize {
    if i == 0 {
        return 1;
    }
    binomial(dim_h, i) + binomial(dim_h, i - 1) * dim_n
}

#[derive(Clone, Debug, Serialize)]
pub struct KTildeCheck {
    pub degree: usize,
    pub dim: usize,
    pub expected_dim: usize,
    /// `K̃^i ⊂ g^{⊗k} ⊗ qR ⊗ g^{⊗(i-k-2)}` for every `k`.
    pub in_relations: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct KoszulSlice {
    pub internal_degree: usize,
    /// `dim qA_{d-i} ⊗ K̃^i` for `i = 0..=d`.
    pub dims: Vec<usize>,
    /// Rank of the differential leaving position `i` (`0` at `i = 0`).
    pub ranks: Vec<usize>,
    pub homology: Vec<usize>,
    pub d_squared_zero: bool,
    /// The differential maps each `qA ⊗ K̃^i` into `qA ⊗ K̃^{i-1}`.
    pub closed: bool,
}

impl KoszulSlice {
    /// Homology vanishes at every position left of the rightmost.
    pub fn exact_interior(&self) -> bool {
        self.homology.iter().skip(1).all(|&h| h == 0)
    }

    pub fn rightmost_homology(&self) -> usize {
        self.homology[0]
    }

    pub fn passed(&self) -> bool {
        self.d_squared_zero && self.closed && self.exact_interior()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct KoszulReport {
    pub max_internal_degree: usize,
    pub k_tilde: Vec<KTildeCheck>,
    pub slices: Vec<KoszulSlice>,
}

impl KoszulReport {
    pub fn passed(&self) -> bool {
        self.k_tilde.iter().all(|k| k.dim == k.expected_dim && k.in_relations)
            && self.slices.iter().all(KoszulSlice::passed)
    }
}

/// `u ⊗ y_1 ⊗ rest ↦ [u y_1] ⊗ rest` from `qA_s ⊗ g^{⊗l}` to
/// `qA_{s+1} ⊗ g^{⊗(l-1)}`; vectors are indexed `qa * dim_g^l + tensor`.
fn multiply_first(source: &QaDegree, target: &QaDegree, dg: usize, l: usize, v: &SparseVec) -> SparseVec {
    let block = dg.pow(l as u32);
    let rest = block / dg;
    let mut terms = Vec::new();
    for (idx, c) in v.entries() {
        let (p, t) = (idx / block, idx % block);
        let (y, r) = (t / rest, t % rest);
        let mut word = source.word(p);
        word.push(y);
        for (q, a) in target.reduce_word(&word).entries() {
            terms.push((q * rest + r, c * a));
        }
    }
    SparseVec::from_pairs(terms)
}

pub fn koszul_acyclicity(pair: &InclusionPair, max_internal_degree: usize) -> KoszulReport {
    let q = QuadraticData::new(pair);
    let dg = pair.dim_g();
    let qa: Vec<QaDegree> = (0..=max_internal_degree).map(|k| QaDegree::new(&q, k)).collect();
    let kt: Vec<Vec<SparseVec>> = (0..=max_internal_degree).map(|i| k_tilde_basis(pair, i)).collect();

    let k_tilde = (0..=max_internal_degree)
        .map(|i| {
            let in_relations = (0..i.saturating_sub(1)).all(|k| {
                let span = q.relation_span(k, i - k - 2);
                kt[i].iter().all(|v| span.contains(v))
            });
            KTildeCheck {
                degree: i,
                dim: kt[i].len(),
                expected_dim: k_tilde_expected_dim(pair.dim_h(), pair.dim_n(), i),
                in_relations,
            }
        })
        .collect();

    let slices = (1..=max_internal_degree)
        .map(|d| {
            // Basis of position i embedded in qA_{d-i} ⊗ g^{⊗i}.
            let chains: Vec<Vec<SparseVec>> = (0..=d)
                .map(|i| {
                    let block = dg.pow(i as u32);
                    let mut out = Vec::new();
                    for p in 0..qa[d - i].dim() {
                        for k in &kt[i] {
                            out.push(SparseVec::from_pairs(
                                k.entries().iter().map(|(t, c)| (p * block + t, c.clone())),
                            ));
                        }
                    }
                    out
                })
                .collect();
            let mut ranks = vec![0; d + 2];
            let mut d_squared_zero = true;
            let mut closed = true;
            for i in 1..=d {
                let images: Vec<SparseVec> =
                    chains[i].iter().map(|v| multiply_first(&qa[d - i], &qa[d - i + 1], dg, i, v)).collect();
                ranks[i] = sparse_rank(&images);
                let mut target = SparseEchelon::new();
                for v in &chains[i - 1] {
                    target.insert(v);
                }
                closed &= images.iter().all(|v| target.contains(v));
                if i >= 2 {
                    d_squared_zero &= images
                        .iter()
                        .all(|v| multiply_first(&qa[d - i + 1], &qa[d - i + 2], dg, i - 1, v).is_zero());
                }
            }
            let dims: Vec<usize> = chains.iter().map(Vec::len).collect();
            let homology = (0..=d).map(|i| dims[i] - ranks[i] - ranks[i + 1]).collect();
            ranks.truncate(d + 1);
            KoszulSlice { internal_degree: d, dims, ranks, homology, d_squared_zero, closed }
        })
        .collect();
    KoszulReport { max_internal_degree, k_tilde, slices }
}
