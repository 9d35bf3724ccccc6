use std::sync::Arc;

use num_traits::{One, Zero};

use super::algebra::LieAlgebra;
use super::module::LieModule;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, SparseVec};

/// A subalgebra `h ⊂ g` together with a linear complement.
///
/// The adapted basis of `g` is `B = [ι(h-basis) | σ(n-basis)]`. In adapted
/// coordinates the first `dim h` letters span `h` and letter `dim h + c` is
/// `σ(n̄_c)`; most of the crate works in these coordinates.
#[derive(Clone, Debug)]
pub struct InclusionPair {
    g: Arc<LieAlgebra>,
    h: Arc<LieAlgebra>,
    embedding: Matrix,
    sigma: Matrix,
    complement_columns: Vec<usize>,
    basis: Matrix,
    basis_inv: Matrix,
    adapted: Arc<LieAlgebra>,
}

fn unit_index(col: &[Scalar]) -> Option<usize> {
    let mut nz = col.iter().enumerate().filter(|(_, x)| !x.is_zero());
    match (nz.next(), nz.next()) {
        (Some((i, x)), None) if x.is_one() => Some(i),
        _ => None,
    }
}

impl InclusionPair {
    /// Pair with the echelon complement: unit vectors at the non-pivot
    /// coordinates of `rref(ιᵀ)`.
    pub fn new(g: LieAlgebra, embedding: Matrix) -> Result<Self> {
        Self::check_embedding(&g, &embedding)?;
        let (_, pivots) = embedding.transpose().rref();
        let columns: Vec<usize> = (0..g.dim()).filter(|c| !pivots.contains(c)).collect();
        let sigma = Matrix::from_fn(g.dim(), columns.len(), |r, c| {
            if r == columns[c] {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        Self::build(g, embedding, sigma, columns)
    }

    /// Subalgebra spanned by a subset of the basis of `g`.
    pub fn from_indices(g: LieAlgebra, indices: &[usize]) -> Result<Self> {
        let emb = Self::indices_embedding(g.dim(), indices)?;
        Self::new(g, emb)
    }

    pub fn indices_embedding(dim: usize, indices: &[usize]) -> Result<Matrix> {
        if let Some(&i) = indices.iter().find(|&&i| i >= dim) {
            return Err(Error::DimensionMismatch(format!("basis index {i} out of range for dimension {dim}")));
        }
        Ok(Matrix::from_fn(dim, indices.len(), |r, c| {
            if r == indices[c] {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        }))
    }

    /// Pair with an explicit complement; the columns of `sigma` are the
    /// images `σ(n̄_c)`.
    pub fn with_complement(g: LieAlgebra, embedding: Matrix, sigma: Matrix) -> Result<Self> {
        Self::check_embedding(&g, &embedding)?;
        if sigma.rows() != g.dim() || sigma.cols() + embedding.cols() != g.dim() {
            return Err(Error::InvalidComplement(format!(
                "expected a {}x{} matrix, got {}x{}",
                g.dim(),
                g.dim() - embedding.cols(),
                sigma.rows(),
                sigma.cols()
            )));
        }
        Self::build(g, embedding, sigma, Vec::new())
    }

    /// The diagonal `x ↦ (x, x)` of `l` into `l ⊕ l`.
    pub fn diagonal(l: &LieAlgebra) -> Result<Self> {
        let d = l.dim();
        let emb = Matrix::from_fn(2 * d, d, |r, c| if r % d == c { Scalar::one() } else { Scalar::zero() });
        Self::new(LieAlgebra::direct_sum(l, l), emb)
    }

    fn check_embedding(g: &LieAlgebra, embedding: &Matrix) -> Result<()> {
        if embedding.rows() != g.dim() {
            return Err(Error::DimensionMismatch(format!(
                "embedding has {} rows, algebra has dimension {}",
                embedding.rows(),
                g.dim()
            )));
        }
        if embedding.rank() != embedding.cols() {
            return Err(Error::NotInjective);
        }
        Ok(())
    }

    fn build(g: LieAlgebra, embedding: Matrix, sigma: Matrix, complement_columns: Vec<usize>) -> Result<Self> {
        let dg = g.dim();
        let dh = embedding.cols();
        let basis = embedding.hstack(&sigma);
        let basis_inv = basis
            .inverse()
            .ok_or_else(|| Error::InvalidComplement("complement meets the subalgebra".into()))?;

        let h_label = |j: usize| match unit_index(&embedding.column(j)) {
            Some(i) => g.labels()[i].clone(),
            None => format!("h{j}"),
        };
        let n_label = |c: usize| match unit_index(&sigma.column(c)) {
            Some(i) => g.labels()[i].clone(),
            None => format!("n{c}"),
        };
        let mut labels: Vec<String> = (0..dh).map(h_label).collect();
        labels.extend((0..dg - dh).map(n_label));

        let columns: Vec<Vec<Scalar>> = (0..dg).map(|c| basis.column(c)).collect();
        let mut table = Vec::with_capacity(dg * dg);
        for i in 0..dg {
            for j in 0..dg {
                let v = basis_inv.apply(&g.bracket(&columns[i], &columns[j]));
                if i < dh && j < dh && v[dh..].iter().any(|x| !x.is_zero()) {
                    return Err(Error::NotSubalgebra { left: labels[i].clone(), right: labels[j].clone() });
                }
                table.push(SparseVec::from_dense(&v));
            }
        }
        let adapted = LieAlgebra::from_table(labels.clone(), table);
        let h_table = (0..dh)
            .flat_map(|i| (0..dh).map(move |j| (i, j)))
            .map(|(i, j)| adapted.bracket_basis(i, j).clone())
            .collect();
        let h = LieAlgebra::from_table(labels[..dh].to_vec(), h_table);
        Ok(InclusionPair {
            g: Arc::new(g),
            h: Arc::new(h),
            embedding,
            sigma,
            complement_columns,
            basis,
            basis_inv,
            adapted: Arc::new(adapted),
        })
    }

    pub fn g(&self) -> &Arc<LieAlgebra> {
        &self.g
    }

    /// `h` with the structure constants induced from `g`.
    pub fn h(&self) -> &Arc<LieAlgebra> {
        &self.h
    }

    /// `g` in the adapted basis.
    pub fn adapted(&self) -> &Arc<LieAlgebra> {
        &self.adapted
    }

    pub fn dim_g(&self) -> usize {
        self.g.dim()
    }

    pub fn dim_h(&self) -> usize {
        self.h.dim()
    }

    pub fn dim_n(&self) -> usize {
        self.g.dim() - self.h.dim()
    }

    pub fn embedding(&self) -> &Matrix {
        &self.embedding
    }

    pub fn sigma(&self) -> &Matrix {
        &self.sigma
    }

    /// Coordinates used for the echelon complement; empty for a custom one.
    pub fn complement_columns(&self) -> &[usize] {
        &self.complement_columns
    }

    /// `B = [ι | σ]`, mapping adapted coordinates to `g` coordinates.
    pub fn adapted_basis(&self) -> &Matrix {
        &self.basis
    }

    /// `B⁻¹`, mapping `g` coordinates to adapted coordinates.
    pub fn adapted_change_of_basis(&self) -> &Matrix {
        &self.basis_inv
    }

    pub fn h_labels(&self) -> &[String] {
        &self.adapted.labels()[..self.dim_h()]
    }

    pub fn n_labels(&self) -> &[String] {
        &self.adapted.labels()[self.dim_h()..]
    }

    pub fn to_adapted(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.basis_inv.apply(v)
    }

    pub fn from_adapted(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.basis.apply(v)
    }

    /// Image in `n` of a vector in `g` coordinates.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.to_adapted(v).split_off(self.dim_h())
    }

    /// `[a, dim h + c]` in adapted coordinates, for `a` an `h` letter.
    pub fn adapted_bracket(&self, i: usize, j: usize) -> &SparseVec {
        self.adapted.bracket_basis(i, j)
    }

    /// The `h`-module `n = g/h`:
    /// `act(a)(n̄_c) = proj [ι(a), σ(n̄_c)]`.
    pub fn quotient_module(&self) -> LieModule {
        let (dh, dn) = (self.dim_h(), self.dim_n());
        let action = (0..dh)
            .map(|a| {
                let mut m = Matrix::zeros(dn, dn);
                for c in 0..dn {
                    for (k, x) in self.adapted_bracket(a, dh + c).entries() {
                        if *k >= dh {
                            m.set(k - dh, c, x.clone());
                        }
                    }
                }
                m
            })
            .collect();
        LieModule::new(self.h.clone(), dn, action).expect("shapes are consistent")
    }

    /// `g` as an `h`-module in the adapted basis.
    pub fn restricted_adjoint(&self) -> LieModule {
        let action = (0..self.dim_h()).map(|a| self.adapted.ad(a)).collect();
        LieModule::new(self.h.clone(), self.dim_g(), action).expect("shapes are consistent")
    }

    pub fn h_adjoint(&self) -> LieModule {
        LieModule::adjoint(self.h.clone())
    }

    pub fn trivial(&self, dim: usize) -> LieModule {
        LieModule::trivial(self.h.clone(), dim)
    }
}
