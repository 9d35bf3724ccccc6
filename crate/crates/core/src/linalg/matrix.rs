//! Dense matrices over the rationals.
//!
//! Storage is dense row-major, but the hot loops (products, elimination)
//! skip zero entries, since almost every matrix this crate builds is an
//! action matrix with a handful of nonzeros per column.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{format_scalar, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| format_scalar(self.get(r, c))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors. All rows must have `cols` entries.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(rows.len(), cols, |r, c| super::scalar::int(rows[r][c]))
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<Scalar>], rows: usize) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {c} has wrong length");
            for (r, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m.set(r, c, x.clone());
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.data[r * self.cols + c] = x;
    }

    pub fn add_at(&mut self, r: usize, c: usize, x: &Scalar) {
        let e = &mut self.data[r * self.cols + c];
        *e += x;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    /// Sub-block `[r0, r1) x [c0, c1)`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        Matrix::from_fn(r1 - r0, c1 - c0, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), self.cols, |r, c| self.get(rows[r], c).clone())
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix columns");
        let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let mut acc = Scalar::zero();
                for &c in &nz {
                    if !row[c].is_zero() {
                        acc += &row[c] * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        let other_nz: Vec<Vec<usize>> =
            (0..other.rows).map(|k| (0..other.cols).filter(|&c| !other.get(k, c).is_zero()).collect()).collect();
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for &c in &other_nz[k] {
                    let prod = a * other.get(k, c);
                    out.add_at(r, c, &prod);
                }
            }
        }
        Ok(out)
    }

    /// Commutator `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// Kronecker product: `(f ⊗ g)(u ⊗ v) = f(u) ⊗ g(v)` in the
    /// lexicographic tensor basis `(i, j) -> i * dim_v + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if !b.is_zero() {
                            out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row-echelon form with leftmost-nonzero pivoting, together with
    /// the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        (m, pivots)
    }

    /// Row-reduces in place, choosing pivots only among the first
    /// `pivot_cols` columns. Returns the pivot columns.
    fn rref_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..pivot_cols {
            if pr == rows {
                break;
            }
            let Some(sel) = (pr..rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            if sel != pr {
                for k in 0..cols {
                    self.data.swap(sel * cols + k, pr * cols + k);
                }
            }
            let inv = Scalar::one() / self.get(pr, c);
            for k in c..cols {
                let x = &self.data[pr * cols + k];
                if !x.is_zero() {
                    self.data[pr * cols + k] = x * &inv;
                }
            }
            let nz: Vec<usize> = (c..cols).filter(|&k| !self.get(pr, k).is_zero()).collect();
            let pivot_row: Vec<Scalar> = nz.iter().map(|&k| self.get(pr, k).clone()).collect();
            for r in 0..rows {
                if r == pr {
                    continue;
                }
                let f = self.get(r, c).clone();
                if f.is_zero() {
                    continue;
                }
                for (k, x) in nz.iter().zip(&pivot_row) {
                    let e = &mut self.data[r * cols + k];
                    *e -= &f * x;
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Some `x` with `A x = b`, free variables set to zero; `None` when the
    /// system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {}, matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let rhs = Matrix::from_columns(&[b.to_vec()], self.rows);
        Ok(self.solve_many(&rhs)?.map(|x| x.column(0)))
    }

    /// Solves `A X = B` column by column with a single elimination.
    pub fn solve_many(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if b.rows != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has {} rows, matrix has {}",
                b.rows, self.rows
            )));
        }
        let mut aug = self.hstack(b);
        let pivots = aug.rref_in_place(self.cols);
        let rank = pivots.len();
        for r in rank..aug.rows {
            if (self.cols..aug.cols).any(|c| !aug.get(r, c).is_zero()) {
                return Ok(None);
            }
        }
        let mut x = Matrix::zeros(self.cols, b.cols);
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, aug.get(r, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (row, &p) in pivots.iter().enumerate() {
                    let x = r.get(row, f);
                    if !x.is_zero() {
                        v[p] = -x.clone();
                    }
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        // A singular square matrix makes `A X = I` inconsistent.
        self.solve_many(&Matrix::identity(self.rows)).ok().flatten()
    }

    /// A matrix `R` with `self * R = I`; requires full row rank.
    pub fn right_inverse(&self) -> Option<Matrix> {
        let mut aug = self.hstack(&Matrix::identity(self.rows));
        let pivots = aug.rref_in_place(self.cols);
        if pivots.len() != self.rows {
            return None;
        }
        // rref(A) = T A has identity on the pivot columns, so A restricted to
        // those columns is T^{-1}.
        let mut r = Matrix::zeros(self.cols, self.rows);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..self.rows {
                r.set(p, j, aug.get(row, self.cols + j).clone());
            }
        }
        Some(r)
    }

    /// A matrix `L` with `L * self = I`; requires full column rank.
    pub fn left_inverse(&self) -> Option<Matrix> {
        self.transpose().right_inverse().map(|r| r.transpose())
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &'a Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix dimension mismatch")
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix dimension mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

/// `f ⊗ g` on tensor products.
pub fn tensor_map(f: &Matrix, g: &Matrix) -> Matrix {
    f.kron(g)
}

/// Basis (in reduced row-echelon form) of the span of `vectors`.
pub fn span_basis(vectors: &[Vec<Scalar>], ambient: usize) -> Vec<Vec<Scalar>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(vectors.to_vec(), ambient).expect("vectors of equal length");
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Basis of `span(U) ∩ span(V)`, computed from the kernel of `[U | -V]`.
pub fn subspace_intersection(u: &[Vec<Scalar>], v: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    let Some(ambient) = u.first().or(v.first()).map(Vec::len) else {
        return Ok(Vec::new());
    };
    if u.iter().chain(v).any(|x| x.len() != ambient) {
        return Err(Error::DimensionMismatch("vectors of unequal ambient dimension".into()));
    }
    if u.is_empty() || v.is_empty() {
        return Ok(Vec::new());
    }
    let mut cols: Vec<Vec<Scalar>> = u.to_vec();
    cols.extend(v.iter().map(|x| x.iter().map(|a| -a).collect()));
    let stacked = Matrix::from_columns(&cols, ambient);
    let combos: Vec<Vec<Scalar>> = stacked
        .kernel_basis()
        .into_iter()
        .map(|k| {
            let mut w = vec![Scalar::zero(); ambient];
            for (coef, vec) in k.iter().zip(u) {
                if coef.is_zero() {
                    continue;
                }
                for (wi, x) in w.iter_mut().zip(vec) {
                    *wi += coef * x;
                }
            }
            w
        })
        .collect();
    Ok(span_basis(&combos, ambient))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let (r, p) = Matrix::identity(3).rref();
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(p, vec![0, 1, 2]);

        let (r, p) = Matrix::zeros(2, 2).rref();
        assert!(r.is_zero());
        assert!(p.is_empty());

        let (r, p) = Matrix::from_i64(&[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn solve_examples() {
        assert_eq!(Matrix::identity(2).solve(&v(&[1, 2])).unwrap(), Some(v(&[1, 2])));
        assert_eq!(Matrix::from_i64(&[&[1, 1]]).solve(&v(&[3])).unwrap(), Some(v(&[3, 0])));
        assert_eq!(Matrix::from_i64(&[&[0]]).solve(&v(&[1])).unwrap(), None);
        assert!(Matrix::identity(2).solve(&v(&[1])).is_err());
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(3).kernel_basis().is_empty());
        assert_eq!(Matrix::zeros(1, 2).kernel_basis().len(), 2);
        assert_eq!(Matrix::from_i64(&[&[1, 1]]).kernel_basis(), vec![v(&[-1, 1])]);
    }

    #[test]
    fn intersection_examples() {
        let e1 = v(&[1, 0, 0]);
        let e2 = v(&[0, 1, 0]);
        let e3 = v(&[0, 0, 1]);
        assert_eq!(subspace_intersection(std::slice::from_ref(&e1), std::slice::from_ref(&e1)).unwrap(), vec![e1.clone()]);
        assert!(subspace_intersection(std::slice::from_ref(&e1), std::slice::from_ref(&e2)).unwrap().is_empty());
        assert_eq!(
            subspace_intersection(&[e1.clone(), e2.clone()], &[e2.clone(), e3]).unwrap(),
            vec![e2]
        );
    }

    #[test]
    fn tensor_map_examples() {
        let a = Matrix::from_i64(&[&[3]]);
        let b = Matrix::from_i64(&[&[5]]);
        assert_eq!(tensor_map(&a, &b), Matrix::from_i64(&[&[15]]));
        assert_eq!(tensor_map(&Matrix::identity(2), &Matrix::identity(3)), Matrix::identity(6));
        assert!(tensor_map(&Matrix::zeros(2, 2), &Matrix::identity(3)).is_zero());
    }

    #[test]
    fn inverses() {
        let a = Matrix::from_i64(&[&[1, 2, 0], &[0, 1, 1]]);
        let r = a.right_inverse().unwrap();
        assert_eq!(&a * &r, Matrix::identity(2));
        let l = a.transpose().left_inverse().unwrap();
        assert_eq!(&l * &a.transpose(), Matrix::identity(2));
        let sq = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        assert_eq!(&sq * &sq.inverse().unwrap(), Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c)
                .prop_map(move |xs| Matrix::from_fn(r, c, |i, j| int(xs[i * c + j])))
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.len(), m.cols());
            for x in &k {
                prop_assert!(m.apply(x).iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn solve_is_exact(m in small_matrix(), seed in proptest::collection::vec(-3i64..4, 5)) {
            let x0: Vec<Scalar> = (0..m.cols()).map(|i| int(seed[i])).collect();
            let b = m.apply(&x0);
            let x = m.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.apply(&x), b);
        }

        #[test]
        fn kron_acts_componentwise(f in small_matrix(), g in small_matrix(), i in 0usize..4, j in 0usize..4) {
            let (i, j) = (i % f.cols(), j % g.cols());
            let mut u = vec![Scalar::zero(); f.cols()];
            u[i] = Scalar::one();
            let mut w = vec![Scalar::zero(); g.cols()];
            w[j] = Scalar::one();
            let mut uv = vec![Scalar::zero(); f.cols() * g.cols()];
            uv[i * g.cols() + j] = Scalar::one();
            let lhs = tensor_map(&f, &g).apply(&uv);
            let fu = f.apply(&u);
            let gw = g.apply(&w);
            let rhs: Vec<Scalar> = fu.iter().flat_map(|a| gw.iter().map(move |b| a * b)).collect();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
