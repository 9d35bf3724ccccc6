//! The connecting cocycle `c` and the obstruction cocycles `a` representing
//! `α_E`.

use num_traits::Zero;

use super::complex::{coboundary_preimage, Cochain};
use crate::error::{Error, Result};
use crate::lie::tuples::strictly_increasing;
use crate::lie::{ext_power_module, hom_module, tensor_module, InclusionPair, LieModule};
use crate::linalg::{Matrix, Scalar};

/// `c ∈ C¹(h, Hom(n, h))` with `c(a)(x̄) = σ(a·x̄) - [ι(a), σ(x̄)]`.
///
/// In adapted coordinates `σ(a·x̄)` has no `h` component, so `c(a)(n̄_c)` is
/// minus the `h` part of `[a, dim h + c]`.
pub fn connecting_cocycle(pair: &InclusionPair) -> Cochain {
    let (dh, dn) = (pair.dim_h(), pair.dim_n());
    let module = hom_module(&pair.quotient_module(), &pair.h_adjoint()).expect("same algebra");
    let values = Matrix::from_fn(dh * dn, dh, |row, a| {
        let (j, c) = (row / dn, row % dn);
        -pair.adapted_bracket(a, dh + c).get(j)
    });
    Cochain::new(1, module, values).expect("shape")
}

/// `a_E ∈ C¹(h, Hom(n ⊗ E, E))` with `a(z)(x̄ ⊗ v) = c(z)(x̄)·v`.
pub fn alpha_cocycle(pair: &InclusionPair, e: &LieModule) -> Result<Cochain> {
    let n = pair.quotient_module();
    n.same_algebra(e)?;
    let (dh, dn, de) = (pair.dim_h(), pair.dim_n(), e.dim());
    let c = connecting_cocycle(pair);
    let module = hom_module(&tensor_module(&n, e)?, e)?;
    let cols = dn * de;
    let mut values = Matrix::zeros(de * cols, dh);
    for z in 0..dh {
        let cz = c.value(z);
        for xc in 0..dn {
            for j in 0..dh {
                let coef = &cz[j * dn + xc];
                if coef.is_zero() {
                    continue;
                }
                let act = e.action(j);
                for w in 0..de {
                    for v in 0..de {
                        let x = act.get(w, v);
                        if !x.is_zero() {
                            values.add_at(w * cols + xc * de + v, z, &(coef * x));
                        }
                    }
                }
            }
        }
    }
    Cochain::new(1, module, values)
}

/// The obstruction cocycle for `E = n`.
pub fn alpha(pair: &InclusionPair) -> Cochain {
    alpha_cocycle(pair, &pair.quotient_module()).expect("same algebra")
}

/// Some 0-cochain `b` with `d b = a`, or `None` when the class of `a` is
/// non-trivial.
pub fn is_trivial(a: &Cochain) -> Result<Option<Cochain>> {
    if a.degree() != 1 {
        return Err(Error::DimensionMismatch(format!("expected a 1-cochain, got degree {}", a.degree())));
    }
    coboundary_preimage(a)
}

/// The same inclusion with complement `σ' = σ + ι∘J`, `J` the all-ones
/// `dim h x dim n` matrix.
pub fn shifted_complement(pair: &InclusionPair) -> Result<InclusionPair> {
    let j = Matrix::from_fn(pair.dim_h(), pair.dim_n(), |_, _| Scalar::from_integer(1.into()));
    let sigma = pair.sigma() + &(pair.embedding() * &j);
    InclusionPair::with_complement((**pair.g()).clone(), pair.embedding().clone(), sigma)
}

/// Whether `α` computed from the shifted complement, transported back,
/// differs from `α` by a coboundary.
pub fn complement_independent(pair: &InclusionPair) -> Result<bool> {
    let other = shifted_complement(pair)?;
    let diff = alpha(pair).sub(&transport_alpha(&other, pair)?)?;
    Ok(is_trivial(&diff)?.is_some())
}

/// Matrix taking `n`-coordinates of `from` to `n`-coordinates of `to`.
/// Both pairs must embed the same `h` in the same `g`.
pub fn quotient_transition(from: &InclusionPair, to: &InclusionPair) -> Result<Matrix> {
    if from.g() != to.g() || from.embedding() != to.embedding() {
        return Err(Error::AlgebraMismatch);
    }
    let dh = to.dim_h();
    let images = to.adapted_change_of_basis() * from.sigma();
    Ok(images.block(dh, to.dim_g(), 0, from.dim_n()))
}

/// `α` of `from`, rewritten in the `n`-basis of `to`:
/// `φ ↦ P ∘ φ ∘ (P⁻¹ ⊗ P⁻¹)`.
pub fn transport_alpha(from: &InclusionPair, to: &InclusionPair) -> Result<Cochain> {
    let p = quotient_transition(from, to)?;
    let pinv = p.inverse().ok_or_else(|| Error::InvalidComplement("singular transition".into()))?;
    let a = alpha(from);
    let dn = to.dim_n();
    let src = pinv.kron(&pinv);
    let n = to.quotient_module();
    let module = hom_module(&tensor_module(&n, &n)?, &n)?;
    let mut values = Matrix::zeros(dn * dn * dn, to.dim_h());
    for z in 0..to.dim_h() {
        let phi = Matrix::from_fn(dn, dn * dn, |r, c| a.values().get(r * dn * dn + c, z).clone());
        let moved = &(&p * &phi) * &src;
        for r in 0..dn {
            for c in 0..dn * dn {
                values.set(r * dn * dn + c, z, moved.get(r, c).clone());
            }
        }
    }
    Cochain::new(1, module, values)
}

/// Inclusion `Λ²M -> M ⊗ M`, `e_i ∧ e_j ↦ e_i⊗e_j - e_j⊗e_i`.
pub fn wedge_inclusion(dim: usize) -> Matrix {
    let pairs = strictly_increasing(dim, 2);
    let mut m = Matrix::zeros(dim * dim, pairs.len());
    for (k, p) in pairs.iter().enumerate() {
        m.set(p[0] * dim + p[1], k, Scalar::from_integer(1.into()));
        m.set(p[1] * dim + p[0], k, Scalar::from_integer((-1).into()));
    }
    m
}

/// `a ∘ (Λ²n ↪ n⊗n)` as a cochain in `C¹(h, Hom(Λ²n, n))`.
pub fn alpha_on_wedge(pair: &InclusionPair) -> Cochain {
    let n = pair.quotient_module();
    let dn = n.dim();
    let a = alpha(pair);
    let incl = wedge_inclusion(dn);
    let w = ext_power_module(&n, 2);
    let module = hom_module(&w, &n).expect("same algebra");
    let dw = w.dim();
    let mut values = Matrix::zeros(dn * dw, pair.dim_h());
    for z in 0..pair.dim_h() {
        let phi = Matrix::from_fn(dn, dn * dn, |r, c| a.values().get(r * dn * dn + c, z).clone());
        let res = &phi * &incl;
        for r in 0..dn {
            for c in 0..dw {
                values.set(r * dw + c, z, res.get(r, c).clone());
            }
        }
    }
    Cochain::new(1, module, values).expect("shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::module::ModuleMap;
    use crate::lie::LieAlgebra;
    use crate::linalg::scalar::int;

    fn borel() -> InclusionPair {
        InclusionPair::from_indices(LieAlgebra::sl2(), &[0, 1]).unwrap()
    }

    #[test]
    fn borel_connecting_values() {
        let c = connecting_cocycle(&borel());
        assert_eq!(c.value(0), vec![int(0), int(-1)]);
        assert_eq!(c.value(1), vec![int(0), int(0)]);
        assert!(c.is_cocycle());
    }

    #[test]
    fn borel_alpha_values() {
        let a = alpha(&borel());
        assert_eq!(a.value(0), vec![int(2)]);
        assert_eq!(a.value(1), vec![int(0)]);
        assert!(a.is_cocycle());
        assert!(is_trivial(&a).unwrap().is_none());
    }

    #[test]
    fn hom_target_is_killed_by_e() {
        let p = borel();
        let n = p.quotient_module();
        let m = hom_module(&tensor_module(&n, &n).unwrap(), &n).unwrap();
        assert!(m.action(0).is_zero());
        assert_eq!(m.action(1), &Matrix::from_i64(&[&[2]]));
        // so no 0-cochain can hit a(e) = 2
        let d0 = super::super::complex::ce_differential(&m, 0);
        assert!(d0.row(0).iter().all(Zero::is_zero));
    }

    #[test]
    fn trivial_coefficients_give_zero() {
        let p = borel();
        assert!(alpha_cocycle(&p, &p.trivial(1)).unwrap().is_zero());
        let ab = InclusionPair::from_indices(LieAlgebra::abelian(3), &[0]).unwrap();
        assert!(connecting_cocycle(&ab).is_zero());
    }

    #[test]
    fn diagonal_alpha_is_trivial() {
        let p = InclusionPair::diagonal(&LieAlgebra::sl2()).unwrap();
        let a = alpha(&p);
        assert!(a.is_cocycle());
        let b = is_trivial(&a).unwrap().unwrap();
        assert_eq!(b.differential().to_vector(), a.to_vector());
    }

    #[test]
    fn sigma_independence_of_class() {
        let emb = Matrix::from_i64(&[&[1, 0], &[0, 1], &[0, 0]]);
        let a = InclusionPair::new(LieAlgebra::sl2(), emb.clone()).unwrap();
        let b = InclusionPair::with_complement(LieAlgebra::sl2(), emb, Matrix::from_i64(&[&[1], &[2], &[1]])).unwrap();
        let moved = transport_alpha(&b, &a).unwrap();
        let diff = moved.sub(&alpha(&a)).unwrap();
        assert!(is_trivial(&diff).unwrap().is_some());
        // σ changed, so the representative does too
        assert!(!diff.is_zero());
    }

    #[test]
    fn wedge_restriction_is_exact() {
        // The Borel of sl2 inside gl2 = sl2 ⊕ k: n is 2-dimensional and α ≠ 0.
        let gl2 = LieAlgebra::direct_sum(&LieAlgebra::sl2(), &LieAlgebra::abelian(1));
        let p = InclusionPair::from_indices(gl2, &[0, 1]).unwrap();
        assert!(is_trivial(&alpha(&p)).unwrap().is_none());
        let w = alpha_on_wedge(&p);
        assert!(w.is_cocycle());
        assert!(is_trivial(&w).unwrap().is_some());
    }

    #[test]
    fn wedge_inclusion_is_equivariant() {
        let p = InclusionPair::from_indices(LieAlgebra::sl2(), &[0]).unwrap();
        let n = p.quotient_module();
        let map = ModuleMap::new(ext_power_module(&n, 2), tensor_module(&n, &n).unwrap(), wedge_inclusion(2)).unwrap();
        assert!(map.is_equivariant());
    }

    #[test]
    fn shifted_complement_gives_same_class() {
        let p = borel();
        let q = shifted_complement(&p).unwrap();
        assert_ne!(q.sigma(), p.sigma());
        assert!(complement_independent(&p).unwrap());
        let d = InclusionPair::diagonal(&LieAlgebra::sl2()).unwrap();
        assert!(complement_independent(&d).unwrap());
    }
}
