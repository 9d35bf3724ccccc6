//! Chevalley–Eilenberg cochains `C^p(h, M) = Hom(Λ^p h, M)`.
//!
//! A cochain is stored as a `dim M x C(dim h, p)` matrix whose column `t` is
//! the value on the `t`-th strictly increasing tuple. As a vector it is
//! flattened column by column: entry `t * dim M + m`.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::tuples::{binomial, sort_with_sign, strictly_increasing};
use crate::lie::LieModule;
use crate::linalg::scalar::int;
use crate::linalg::{Matrix, Scalar};

#[derive(Clone, Debug)]
pub struct Cochain {
    degree: usize,
    module: LieModule,
    values: Matrix,
}

impl Cochain {
    pub fn new(degree: usize, module: LieModule, values: Matrix) -> Result<Self> {
        let tuples = binomial(module.algebra().dim(), degree);
        if values.rows() != module.dim() || values.cols() != tuples {
            return Err(Error::DimensionMismatch(format!(
                "cochain of degree {degree} needs a {}x{tuples} matrix, got {}x{}",
                module.dim(),
                values.rows(),
                values.cols()
            )));
        }
        Ok(Cochain { degree, module, values })
    }

    pub fn zero(degree: usize, module: LieModule) -> Self {
        let tuples = binomial(module.algebra().dim(), degree);
        let values = Matrix::zeros(module.dim(), tuples);
        Cochain { degree, module, values }
    }

    pub fn from_vector(degree: usize, module: LieModule, v: &[Scalar]) -> Result<Self> {
        let d = module.dim();
        let tuples = binomial(module.algebra().dim(), degree);
        if v.len() != d * tuples {
            return Err(Error::DimensionMismatch(format!("cochain vector has length {}, expected {}", v.len(), d * tuples)));
        }
        let values = Matrix::from_fn(d, tuples, |m, t| v[t * d + m].clone());
        Ok(Cochain { degree, module, values })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn module(&self) -> &LieModule {
        &self.module
    }

    pub fn values(&self) -> &Matrix {
        &self.values
    }

    /// Value on the `t`-th basis tuple (for degree 1, on the `t`-th basis
    /// element of `h`).
    pub fn value(&self, t: usize) -> Vec<Scalar> {
        self.values.column(t)
    }

    pub fn to_vector(&self) -> Vec<Scalar> {
        let d = self.module.dim();
        (0..self.values.cols() * d).map(|i| self.values.get(i % d, i / d).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.module.same_algebra(&other.module)?;
        if self.degree != other.degree || self.module.dim() != other.module.dim() {
            return Err(Error::DimensionMismatch("cochains live in different spaces".into()));
        }
        Ok(Cochain { degree: self.degree, module: self.module.clone(), values: &self.values - &other.values })
    }

    /// `d` applied to this cochain.
    pub fn differential(&self) -> Cochain {
        let d = ce_differential(&self.module, self.degree);
        Cochain::from_vector(self.degree + 1, self.module.clone(), &d.apply(&self.to_vector())).expect("shape")
    }

    pub fn is_cocycle(&self) -> bool {
        self.differential().is_zero()
    }
}

/// Matrix of `d: C^p(h, M) -> C^{p+1}(h, M)`:
///
/// `(dφ)(x_0..x_p) = Σ_i (-1)^i x_i·φ(..x̂_i..) + Σ_{i<j} (-1)^{i+j} φ([x_i,x_j], ..x̂_i..x̂_j..)`.
pub fn ce_differential(module: &LieModule, p: usize) -> Matrix {
    let h = module.algebra();
    let n = h.dim();
    let dm = module.dim();
    let sources = strictly_increasing(n, p);
    let targets = strictly_increasing(n, p + 1);
    let index: HashMap<Vec<usize>, usize> = sources.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let mut out = Matrix::zeros(targets.len() * dm, sources.len() * dm);
    for (ti, t) in targets.iter().enumerate() {
        for i in 0..=p {
            let mut rest = t.clone();
            let xi = rest.remove(i);
            let si = index[&rest];
            let sign = if i % 2 == 0 { int(1) } else { int(-1) };
            let a = module.action(xi);
            for r in 0..dm {
                for c in 0..dm {
                    let x = a.get(r, c);
                    if !x.is_zero() {
                        out.add_at(ti * dm + r, si * dm + c, &(x * &sign));
                    }
                }
            }
        }
        for i in 0..=p {
            for j in i + 1..=p {
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                let rest: Vec<usize> = t.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, &x)| x).collect();
                for (k, coef) in h.bracket_basis(t[i], t[j]).entries() {
                    let mut tuple = vec![*k];
                    tuple.extend(&rest);
                    if let Some((s, sorted)) = sort_with_sign(&tuple) {
                        let si = index[&sorted];
                        let x = coef * int(sign * s);
                        for m in 0..dm {
                            out.add_at(ti * dm + m, si * dm + m, &x);
                        }
                    }
                }
            }
        }
    }
    out
}

/// `dim H¹(h, M) = dim ker d¹ - rank d⁰`.
pub fn h1_dimension(module: &LieModule) -> usize {
    let n = module.algebra().dim();
    let c1 = n * module.dim();
    let d1 = ce_differential(module, 1);
    let d0 = ce_differential(module, 0);
    c1 - d1.rank() - d0.rank()
}

/// Some `b` with `d b = φ`, or `None` when `φ` is not a coboundary.
pub fn coboundary_preimage(cochain: &Cochain) -> Result<Option<Cochain>> {
    if !cochain.is_cocycle() {
        return Err(Error::NotACocycle);
    }
    if cochain.degree == 0 {
        return Ok(if cochain.is_zero() { Some(Cochain::zero(0, cochain.module.clone())) } else { None });
    }
    let d = ce_differential(&cochain.module, cochain.degree - 1);
    Ok(d
        .solve(&cochain.to_vector())?
        .map(|b| Cochain::from_vector(cochain.degree - 1, cochain.module.clone(), &b).expect("shape")))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::lie::{hom_module, tensor_module, InclusionPair, LieAlgebra};

    fn modules() -> Vec<LieModule> {
        let sl2 = Arc::new(LieAlgebra::sl2());
        let borel = InclusionPair::from_indices(LieAlgebra::sl2(), &[0, 1]).unwrap();
        let n = borel.quotient_module();
        let nn = tensor_module(&n, &n).unwrap();
        vec![
            LieModule::adjoint(sl2.clone()),
            LieModule::trivial(sl2, 2),
            hom_module(&nn, &n).unwrap(),
            hom_module(&n, &borel.h_adjoint()).unwrap(),
            LieModule::adjoint(Arc::new(LieAlgebra::heisenberg())),
        ]
    }

    #[test]
    fn d_squared_vanishes() {
        for m in modules() {
            for p in 0..3 {
                let d0 = ce_differential(&m, p);
                let d1 = ce_differential(&m, p + 1);
                assert!((&d1 * &d0).is_zero(), "p = {p}");
            }
        }
    }

    #[test]
    fn trivial_and_abelian_cases() {
        let sl2 = Arc::new(LieAlgebra::sl2());
        assert!(ce_differential(&LieModule::trivial(sl2, 3), 0).is_zero());
        let ab = Arc::new(LieAlgebra::abelian(3));
        assert!(ce_differential(&LieModule::trivial(ab.clone(), 2), 1).is_zero());
        assert_eq!(h1_dimension(&LieModule::trivial(ab.clone(), 2)), 6);
        assert_eq!(h1_dimension(&LieModule::zero(ab)), 0);
    }

    #[test]
    fn whitehead_for_sl2() {
        let sl2 = Arc::new(LieAlgebra::sl2());
        let ad = LieModule::adjoint(sl2.clone());
        assert_eq!(h1_dimension(&ad), 0);
        assert_eq!(h1_dimension(&tensor_module(&ad, &ad).unwrap()), 0);
        assert_eq!(h1_dimension(&LieModule::trivial(sl2, 1)), 0);
    }

    #[test]
    fn low_degree_formulas() {
        let ad = LieModule::adjoint(Arc::new(LieAlgebra::sl2()));
        let b = Cochain::from_vector(0, ad.clone(), &[int(1), int(0), int(0)]).unwrap();
        let db = b.differential();
        // (db)(x) = x·e
        assert_eq!(db.value(0), vec![int(0), int(0), int(0)]);
        assert_eq!(db.value(1), vec![int(2), int(0), int(0)]);
        assert_eq!(db.value(2), vec![int(0), int(-1), int(0)]);
        assert!(db.is_cocycle());
        let back = coboundary_preimage(&db).unwrap().unwrap();
        assert_eq!(back.differential().to_vector(), db.to_vector());
    }

    #[test]
    fn non_cocycle_is_rejected() {
        let ab = Arc::new(LieAlgebra::heisenberg());
        let ad = LieModule::adjoint(ab);
        // φ(x) = x, zero elsewhere: (dφ)(x, y) = x·φ(y) - y·φ(x) - φ(z) = -[y, x] = z.
        let mut v = vec![int(0); 9];
        v[0] = int(1);
        let phi = Cochain::from_vector(1, ad, &v).unwrap();
        assert!(!phi.is_cocycle());
        assert!(matches!(coboundary_preimage(&phi), Err(Error::NotACocycle)));
    }
}
