use num_traits::Zero;
use serde::Serialize;

use crate::linalg::scalar::{int, Scalar};
use crate::linalg::{Matrix, SparseVec};

/// `(i, j, [(k, c_ij^k)])` entries for [`LieAlgebra::from_brackets`].
pub type BracketEntry<'a> = (usize, usize, &'a [(usize, i64)]);

/// A finite-dimensional Lie algebra given by structure constants
/// `[x_i, x_j] = Σ_k c_ij^k x_k`.
///
/// Construction does not validate; call [`LieAlgebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    brackets: Vec<SparseVec>,
}

/// Violations found by [`LieAlgebra::validate`]; empty iff the structure
/// constants define a Lie algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LieValidation {
    pub antisymmetry: Vec<(usize, usize)>,
    pub jacobi: Vec<(usize, usize, usize)>,
}

impl LieValidation {
    pub fn is_valid(&self) -> bool {
        self.antisymmetry.is_empty() && self.jacobi.is_empty()
    }
}

impl LieAlgebra {
    /// Raw constructor: `brackets[i * dim + j]` is `[x_i, x_j]`.
    pub fn from_table(labels: Vec<String>, brackets: Vec<SparseVec>) -> Self {
        assert_eq!(brackets.len(), labels.len() * labels.len(), "bracket table has wrong size");
        LieAlgebra { labels, brackets }
    }

    /// Builds from brackets listed for some ordered pairs; the reversed pair
    /// is filled in by antisymmetry unless it is listed too.
    pub fn from_brackets(labels: &[&str], brackets: &[BracketEntry]) -> Self {
        let n = labels.len();
        let mut table = vec![SparseVec::new(); n * n];
        let mut given = vec![false; n * n];
        for &(i, j, terms) in brackets {
            table[i * n + j] = SparseVec::from_pairs(terms.iter().map(|&(k, c)| (k, int(c))));
            given[i * n + j] = true;
        }
        for i in 0..n {
            for j in 0..n {
                if given[i * n + j] && !given[j * n + i] {
                    table[j * n + i] = table[i * n + j].scale(&int(-1));
                }
            }
        }
        LieAlgebra { labels: labels.iter().map(|s| s.to_string()).collect(), brackets: table }
    }

    pub fn abelian(dim: usize) -> Self {
        let labels = (0..dim).map(|i| format!("x{i}")).collect();
        LieAlgebra { labels, brackets: vec![SparseVec::new(); dim * dim] }
    }

    /// `sl2` in the basis `(e, h, f)`: `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
    pub fn sl2() -> Self {
        Self::from_brackets(&["e", "h", "f"], &[(0, 2, &[(1, 1)]), (1, 0, &[(0, 2)]), (1, 2, &[(2, -2)])])
    }

    /// Heisenberg algebra `(x, y, z)` with `[x, y] = z`.
    pub fn heisenberg() -> Self {
        Self::from_brackets(&["x", "y", "z"], &[(0, 1, &[(2, 1)])])
    }

    /// Direct sum; the labels of the two summands get suffixes `1` and `2`.
    pub fn direct_sum(a: &LieAlgebra, b: &LieAlgebra) -> Self {
        let (da, db) = (a.dim(), b.dim());
        let n = da + db;
        let mut table = vec![SparseVec::new(); n * n];
        for i in 0..da {
            for j in 0..da {
                table[i * n + j] = a.bracket_basis(i, j).clone();
            }
        }
        for i in 0..db {
            for j in 0..db {
                table[(da + i) * n + da + j] = SparseVec::from_pairs(
                    b.bracket_basis(i, j).entries().iter().map(|(k, x)| (da + k, x.clone())),
                );
            }
        }
        let labels = a.labels.iter().map(|l| format!("{l}1")).chain(b.labels.iter().map(|l| format!("{l}2"))).collect();
        LieAlgebra { labels, brackets: table }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.brackets[i * self.dim() + j]
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, v: SparseVec) {
        let n = self.dim();
        self.brackets[i * n + j] = v;
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.bracket_basis(i, j).entries() {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// Matrix of `ad(x_i)`.
    pub fn ad(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, c) in self.bracket_basis(i, j).entries() {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    pub fn validate(&self) -> LieValidation {
        let n = self.dim();
        let mut report = LieValidation::default();
        for i in 0..n {
            for j in i..n {
                let bij = self.bracket_basis(i, j);
                let bji = self.bracket_basis(j, i);
                if bij.axpy(&int(1), bji).nnz() != 0 {
                    report.antisymmetry.push((i, j));
                }
            }
        }
        let basis = |i: usize| {
            let mut v = vec![Scalar::zero(); n];
            v[i] = int(1);
            v
        };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (xi, xj, xk) = (basis(i), basis(j), basis(k));
                    let t1 = self.bracket(&self.bracket(&xi, &xj), &xk);
                    let t2 = self.bracket(&self.bracket(&xj, &xk), &xi);
                    let t3 = self.bracket(&self.bracket(&xk, &xi), &xj);
                    if t1.iter().zip(&t2).zip(&t3).any(|((a, b), c)| !(a + b + c).is_zero()) {
                        report.jacobi.push((i, j, k));
                    }
                }
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_algebras_are_valid() {
        assert!(LieAlgebra::abelian(3).validate().is_valid());
        assert!(LieAlgebra::sl2().validate().is_valid());
        assert!(LieAlgebra::heisenberg().validate().is_valid());
        let s = LieAlgebra::direct_sum(&LieAlgebra::sl2(), &LieAlgebra::heisenberg());
        assert_eq!(s.dim(), 6);
        assert!(s.validate().is_valid());
    }

    #[test]
    fn sl2_relations() {
        let g = LieAlgebra::sl2();
        assert_eq!(g.bracket_basis(0, 2).get(1), int(1));
        assert_eq!(g.bracket_basis(1, 0).get(0), int(2));
        assert_eq!(g.bracket_basis(1, 2).get(2), int(-2));
        assert_eq!(g.bracket_basis(2, 1).get(2), int(2));
    }

    #[test]
    fn one_sided_flip_breaks_antisymmetry() {
        let mut g = LieAlgebra::sl2();
        g.set_bracket(0, 2, SparseVec::from_pairs([(1, int(-1))]));
        let r = g.validate();
        assert_eq!(r.antisymmetry, vec![(0, 2)]);
    }

    #[test]
    fn scaled_bracket_breaks_jacobi() {
        let mut g = LieAlgebra::sl2();
        g.set_bracket(1, 0, SparseVec::from_pairs([(0, int(3))]));
        g.set_bracket(0, 1, SparseVec::from_pairs([(0, int(-3))]));
        let r = g.validate();
        assert!(r.antisymmetry.is_empty());
        assert_eq!(r.jacobi, vec![(0, 1, 2)]);
    }
}
