//! Sparse exact elimination.
//!
//! The large systems in this crate (equivariant-section searches, relation
//! spans in tensor powers) have a few nonzeros per row, so we keep rows as
//! sorted `(column, value)` lists and eliminate incrementally.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::scalar::Scalar;

/// Sorted list of `(index, nonzero value)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    /// Builds from unsorted pairs, summing duplicates and dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, x) in pairs {
            if x.is_zero() {
                continue;
            }
            *acc.entry(i).or_insert_with(Scalar::zero) += x;
        }
        SparseVec { entries: acc.into_iter().filter(|(_, x)| !x.is_zero()).collect() }
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        SparseVec { entries: v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect() }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); len];
        for (i, x) in &self.entries {
            v[*i] = x.clone();
        }
        v
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> SparseVec {
        if s.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, x * s)).collect() }
    }

    /// `self + s * other`.
    pub fn axpy(&self, s: &Scalar, other: &SparseVec) -> SparseVec {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() || b < other.entries.len() {
            let ka = self.entries.get(a).map(|e| e.0);
            let kb = other.entries.get(b).map(|e| e.0);
            match (ka, kb) {
                (Some(i), Some(j)) if i == j => {
                    let x = &self.entries[a].1 + s * &other.entries[b].1;
                    if !x.is_zero() {
                        out.push((i, x));
                    }
                    a += 1;
                    b += 1;
                }
                (Some(i), Some(j)) if i < j => {
                    out.push((i, self.entries[a].1.clone()));
                    a += 1;
                }
                (Some(i), None) => {
                    out.push((i, self.entries[a].1.clone()));
                    a += 1;
                }
                (_, Some(j)) => {
                    out.push((j, s * &other.entries[b].1));
                    b += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        SparseVec { entries: out }
    }
}

/// Incrementally built row-echelon basis. Each stored row has a leading 1
/// at its pivot and no entries to the left of it.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    rows: HashMap<usize, SparseVec>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        SparseEchelon { rows: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Reduces `v` modulo the span; the result has no pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Scalar> = v.entries.iter().cloned().collect();
        let mut out = Vec::new();
        while let Some((c, x)) = acc.pop_first() {
            match self.rows.get(&c) {
                Some(row) => {
                    for (k, y) in row.entries.iter().skip(1) {
                        let e = acc.entry(*k).or_insert_with(Scalar::zero);
                        *e -= &x * y;
                        if e.is_zero() {
                            acc.remove(k);
                        }
                    }
                }
                None => out.push((c, x)),
            }
        }
        SparseVec { entries: out }
    }

    /// Adds `v` to the span. Returns `true` when the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        match r.entries.first() {
            None => false,
            Some((p, lead)) => {
                let inv = Scalar::one() / lead;
                let p = *p;
                self.rows.insert(p, r.scale(&inv));
                true
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.keys().copied().collect();
        p.sort_unstable();
        p
    }
}

/// Rank of a family of sparse vectors.
pub fn sparse_rank<'a>(vectors: impl IntoIterator<Item = &'a SparseVec>) -> usize {
    let mut e = SparseEchelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// A linear system `A x = b` given by sparse equation rows.
#[derive(Clone, Debug)]
pub struct SparseSystem {
    unknowns: usize,
    rows: Vec<(SparseVec, Scalar)>,
}

impl SparseSystem {
    pub fn new(unknowns: usize) -> Self {
        SparseSystem { unknowns, rows: Vec::new() }
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn equations(&self) -> usize {
        self.rows.len()
    }

    pub fn push(&mut self, row: SparseVec, rhs: Scalar) {
        if row.is_zero() && rhs.is_zero() {
            return;
        }
        self.rows.push((row, rhs));
    }

    /// Some solution (free variables zero) or `None` when inconsistent.
    ///
    /// Gaussian elimination with Markowitz-style pivoting: the sparsest
    /// remaining row is used next, pivoting on its least frequent column.
    pub fn solve(&self) -> Option<Vec<Scalar>> {
        let n = self.unknowns;
        let mut rows: Vec<Option<SparseVec>> = Vec::with_capacity(self.rows.len());
        let mut active: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut col_rows: Vec<HashSet<usize>> = vec![HashSet::new(); n];
        let unknown_count = |v: &SparseVec| v.entries.iter().filter(|(c, _)| *c < n).count();
        for (row, rhs) in &self.rows {
            let mut v = row.clone();
            if !rhs.is_zero() {
                v.entries.push((n, rhs.clone()));
            }
            let cnt = unknown_count(&v);
            if cnt == 0 {
                if !v.is_zero() {
                    return None;
                }
                continue;
            }
            let id = rows.len();
            for (c, _) in v.entries.iter().filter(|(c, _)| *c < n) {
                col_rows[*c].insert(id);
            }
            active.insert((cnt, id));
            rows.push(Some(v));
        }

        let mut pivots: Vec<(usize, SparseVec)> = Vec::new();
        while let Some((_, r)) = active.pop_first() {
            let row = rows[r].take().expect("active rows are present");
            let p = row
                .entries
                .iter()
                .filter(|(c, _)| *c < n)
                .map(|(c, _)| *c)
                .min_by_key(|c| (col_rows[*c].len(), *c))
                .expect("active rows have an unknown");
            for (c, _) in row.entries.iter().filter(|(c, _)| *c < n) {
                col_rows[*c].remove(&r);
            }
            let row = row.scale(&(Scalar::one() / row.get(p)));
            let others: Vec<usize> = col_rows[p].iter().copied().collect();
            for r2 in others {
                let old = rows[r2].take().expect("indexed rows are present");
                let coef = -old.get(p);
                let new = old.axpy(&coef, &row);
                active.remove(&(unknown_count(&old), r2));
                for (c, _) in old.entries.iter().filter(|(c, _)| *c < n) {
                    col_rows[*c].remove(&r2);
                }
                let cnt = unknown_count(&new);
                if cnt == 0 {
                    if !new.is_zero() {
                        return None;
                    }
                    continue;
                }
                for (c, _) in new.entries.iter().filter(|(c, _)| *c < n) {
                    col_rows[*c].insert(r2);
                }
                active.insert((cnt, r2));
                rows[r2] = Some(new);
            }
            pivots.push((p, row));
        }

        let mut x = vec![Scalar::zero(); n];
        for (p, row) in pivots.iter().rev() {
            let mut val = row.get(n);
            for (c, a) in &row.entries {
                if *c != *p && *c < n && !x[*c].is_zero() {
                    val -= a * &x[*c];
                }
            }
            x[*p] = val;
        }
        Some(x)
    }

    /// Residual check `A x = b`.
    pub fn check(&self, x: &[Scalar]) -> bool {
        self.rows.iter().all(|(row, rhs)| {
            let mut acc = Scalar::zero();
            for (c, a) in row.entries() {
                acc += a * &x[*c];
            }
            &acc == rhs
        })
    }
}

/// Columns of a dense matrix as sparse vectors.
pub fn sparse_columns(m: &Matrix) -> Vec<SparseVec> {
    (0..m.cols())
        .map(|c| SparseVec::from_pairs((0..m.rows()).map(|r| (r, m.get(r, c).clone()))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;
    use proptest::prelude::*;

    fn sv(xs: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_pairs(xs.iter().map(|&(i, x)| (i, int(x))))
    }

    #[test]
    fn echelon_rank_and_reduce() {
        let mut e = SparseEchelon::new();
        assert!(e.insert(&sv(&[(0, 1), (1, -1)])));
        assert!(e.insert(&sv(&[(1, 1), (2, -1)])));
        assert!(!e.insert(&sv(&[(0, 1), (2, -1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&sv(&[(0, 2), (2, -2)])));
        // Quotient coordinates of e0 live on the single non-pivot column.
        assert_eq!(e.reduce(&sv(&[(0, 1)])), sv(&[(2, 1)]));
    }

    #[test]
    fn system_solves_and_detects_inconsistency() {
        let mut s = SparseSystem::new(2);
        s.push(sv(&[(0, 1), (1, 1)]), int(3));
        let x = s.solve().unwrap();
        assert!(s.check(&x));

        let mut bad = SparseSystem::new(1);
        bad.push(sv(&[(0, 1)]), int(1));
        bad.push(sv(&[(0, 2)]), int(3));
        assert!(bad.solve().is_none());
    }

    proptest! {
        #[test]
        fn sparse_agrees_with_dense(rows in 1usize..6, cols in 1usize..6,
                                    xs in proptest::collection::vec(-2i64..3, 36),
                                    x0 in proptest::collection::vec(-2i64..3, 6)) {
            let m = Matrix::from_fn(rows, cols, |r, c| int(xs[r * 6 + c]));
            let cols_sparse: Vec<SparseVec> = (0..rows)
                .map(|r| SparseVec::from_dense(m.row(r)))
                .collect();
            prop_assert_eq!(sparse_rank(&cols_sparse), m.rank());

            let xv: Vec<Scalar> = (0..cols).map(|i| int(x0[i])).collect();
            let b = m.apply(&xv);
            let mut sys = SparseSystem::new(cols);
            for r in 0..rows {
                sys.push(SparseVec::from_dense(m.row(r)), b[r].clone());
            }
            let x = sys.solve().expect("consistent");
            prop_assert_eq!(m.apply(&x), b);
        }
    }
}
