//! Extensions of an `h`-action on `E` to the first-order neighbourhood, and
//! the pushout module `Q`.

use num_traits::Zero;

use super::complex::{ce_differential, Cochain};
use super::obstruction::alpha_cocycle;
use crate::error::{Error, Result};
use crate::lie::module::ModuleMap;
use crate::lie::{tensor_module, InclusionPair, LieModule};
use crate::linalg::{Matrix, Scalar};

/// A map `ρ: g -> End(E)` restricting to the action on `h` and commuting
/// with `h`: `ρ([a, x]) = [a, ρ(x)]`.
///
/// `ρ` is stored per letter of the adapted basis of `g`.
#[derive(Clone, Debug)]
pub struct ExtensionDatum {
    pair: InclusionPair,
    module: LieModule,
    rho: Vec<Matrix>,
}

impl ExtensionDatum {
    /// Validates both invariants.
    pub fn new(pair: &InclusionPair, module: &LieModule, rho: Vec<Matrix>) -> Result<Self> {
        let failures = extension_failures(pair, module, &rho);
        if let Some(first) = failures.into_iter().next() {
            return Err(Error::InvalidExtension(first));
        }
        Ok(ExtensionDatum { pair: pair.clone(), module: module.clone(), rho })
    }

    pub fn pair(&self) -> &InclusionPair {
        &self.pair
    }

    pub fn module(&self) -> &LieModule {
        &self.module
    }

    /// `ρ` of the `i`-th adapted letter.
    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    /// `ρ(σ(n̄_c))`.
    pub fn rho_n(&self, c: usize) -> &Matrix {
        &self.rho[self.pair.dim_h() + c]
    }

    /// `ρ` of a vector in the original coordinates of `g`.
    pub fn rho_g(&self, v: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.module.dim(), self.module.dim());
        for (i, x) in self.pair.to_adapted(v).iter().enumerate() {
            if !x.is_zero() {
                out = &out + &self.rho[i].scale(x);
            }
        }
        out
    }
}

/// Human-readable list of violated invariants for a candidate `ρ`.
pub fn extension_failures(pair: &InclusionPair, module: &LieModule, rho: &[Matrix]) -> Vec<String> {
    let (dh, dg, de) = (pair.dim_h(), pair.dim_g(), module.dim());
    let mut out = Vec::new();
    if rho.len() != dg || rho.iter().any(|m| m.rows() != de || m.cols() != de) {
        out.push(format!("expected {dg} matrices of size {de}x{de}"));
        return out;
    }
    let labels = pair.adapted().labels();
    for a in 0..dh {
        if &rho[a] != module.action(a) {
            out.push(format!("ρ({}) differs from the action", labels[a]));
        }
    }
    for a in 0..dh {
        for x in 0..dg {
            let mut lhs = Matrix::zeros(de, de);
            for (k, c) in pair.adapted_bracket(a, x).entries() {
                lhs = &lhs + &rho[*k].scale(c);
            }
            if lhs != module.action(a).commutator(&rho[x]) {
                out.push(format!("ρ([{}, {}]) != [{}, ρ({})]", labels[a], labels[x], labels[a], labels[x]));
            }
        }
    }
    out
}

/// Some extension of the action on `E`, or `None` when `α_E ≠ 0`.
///
/// Writing `B_x = ρ(σ(x̄))`, equivariance says `d B = -a_E` for the 0-cochain
/// `B ∈ Hom(n ⊗ E, E)`; free variables are set to zero.
pub fn find_extension(pair: &InclusionPair, e: &LieModule) -> Result<Option<ExtensionDatum>> {
    let a = alpha_cocycle(pair, e)?;
    let d0 = ce_differential(a.module(), 0);
    let rhs: Vec<Scalar> = a.to_vector().iter().map(|x| -x).collect();
    let Some(b) = d0.solve(&rhs)? else {
        return Ok(None);
    };
    let (dh, dn, de) = (pair.dim_h(), pair.dim_n(), e.dim());
    let mut rho: Vec<Matrix> = e.actions().to_vec();
    for c in 0..dn {
        rho.push(Matrix::from_fn(de, de, |w, v| b[w * dn * de + c * de + v].clone()));
    }
    debug_assert_eq!(rho.len(), dh + dn);
    ExtensionDatum::new(pair, e, rho).map(Some)
}

/// The 0-cochain `B` of an extension datum, for comparison with the
/// coboundary description.
pub fn extension_cochain(datum: &ExtensionDatum) -> Cochain {
    let pair = datum.pair();
    let e = datum.module();
    let n = pair.quotient_module();
    let (dn, de) = (pair.dim_n(), e.dim());
    let module = crate::lie::hom_module(&tensor_module(&n, e).expect("same algebra"), e).expect("same algebra");
    let values = Matrix::from_fn(de * dn * de, 1, |r, _| {
        let (w, rest) = (r / (dn * de), r % (dn * de));
        datum.rho_n(rest / de).get(w, rest % de).clone()
    });
    Cochain::new(0, module, values).expect("shape")
}

/// The exact sequence `0 -> E -> Q -> n ⊗ E -> 0` obtained by pushing
/// `0 -> h -> g -> n -> 0` (tensored with `E`) out along the action map.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub module: LieModule,
    pub inclusion: ModuleMap,
    pub projection: ModuleMap,
}

/// `Q = (E ⊕ g⊗E) / span{(a·v, 0) - (0, ι(a)⊗v)}`.
///
/// In the adapted basis every relation eliminates one coordinate
/// `(0, a⊗v)`, so `Q` has basis `E` followed by `σ(n̄_c) ⊗ v`.
pub fn pushout_module(pair: &InclusionPair, e: &LieModule) -> Result<Pushout> {
    let n = pair.quotient_module();
    n.same_algebra(e)?;
    let ne = tensor_module(&n, e)?;
    let (dh, dn, de) = (pair.dim_h(), pair.dim_n(), e.dim());
    let dq = de + dn * de;
    let action = (0..dh)
        .map(|x| {
            let mut m = Matrix::zeros(dq, dq);
            for r in 0..de {
                for c in 0..de {
                    m.set(r, c, e.action(x).get(r, c).clone());
                }
            }
            for c in 0..dn {
                for (j, coef) in pair.adapted_bracket(x, dh + c).entries() {
                    if *j >= dh {
                        continue;
                    }
                    let act = e.action(*j);
                    for w in 0..de {
                        for v in 0..de {
                            let y = act.get(w, v);
                            if !y.is_zero() {
                                m.add_at(w, de + c * de + v, &(coef * y));
                            }
                        }
                    }
                }
            }
            let lower = ne.action(x);
            for r in 0..dn * de {
                for c in 0..dn * de {
                    m.set(de + r, de + c, lower.get(r, c).clone());
                }
            }
            m
        })
        .collect();
    let q = LieModule::new(pair.h().clone(), dq, action)?;
    let incl = Matrix::from_fn(dq, de, |r, c| if r == c { Scalar::from_integer(1.into()) } else { Scalar::zero() });
    let proj = Matrix::from_fn(dn * de, dq, |r, c| if c == de + r { Scalar::from_integer(1.into()) } else { Scalar::zero() });
    Ok(Pushout {
        inclusion: ModuleMap::new(e.clone(), q.clone(), incl)?,
        projection: ModuleMap::new(q.clone(), ne, proj)?,
        module: q,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::obstruction::{alpha, is_trivial};
    use crate::lie::module::intertwiner_basis;
    use crate::lie::LieAlgebra;
    use crate::linalg::scalar::{int, ratio};

    fn borel() -> InclusionPair {
        InclusionPair::from_indices(LieAlgebra::sl2(), &[0, 1]).unwrap()
    }

    fn diagonal() -> InclusionPair {
        InclusionPair::diagonal(&LieAlgebra::sl2()).unwrap()
    }

    #[test]
    fn borel_has_no_extension() {
        let p = borel();
        assert!(find_extension(&p, &p.quotient_module()).unwrap().is_none());
    }

    #[test]
    fn diagonal_extension_and_half_adjoint() {
        let p = diagonal();
        let n = p.quotient_module();
        let datum = find_extension(&p, &n).unwrap().unwrap();
        assert!(extension_failures(&p, &n, &(0..6).map(|i| datum.rho(i).clone()).collect::<Vec<_>>()).is_empty());
        // ρ(σ(x̄)) = ½ ad(x) is another valid choice.
        let mut rho: Vec<Matrix> = n.actions().to_vec();
        rho.extend(n.actions().iter().map(|m| m.scale(&ratio(1, 2))));
        assert!(ExtensionDatum::new(&p, &n, rho).is_ok());
        let mut third: Vec<Matrix> = n.actions().to_vec();
        third.extend(n.actions().iter().map(|m| m.scale(&ratio(1, 3))));
        assert!(ExtensionDatum::new(&p, &n, third).is_ok());
        let mut shifted: Vec<Matrix> = n.actions().to_vec();
        shifted.extend(n.actions().iter().map(|m| &m.scale(&ratio(1, 3)) + &Matrix::identity(3)));
        assert!(ExtensionDatum::new(&p, &n, shifted).is_err());
        let mut worse: Vec<Matrix> = n.actions().to_vec();
        worse.extend((0..3).map(|i| n.action((i + 1) % 3).clone()));
        assert!(matches!(ExtensionDatum::new(&p, &n, worse), Err(Error::InvalidExtension(_))));
    }

    #[test]
    fn extension_matches_coboundary() {
        for p in [diagonal(), InclusionPair::diagonal(&LieAlgebra::heisenberg()).unwrap()] {
            let a = alpha(&p);
            let b = is_trivial(&a).unwrap().unwrap();
            let datum = find_extension(&p, &p.quotient_module()).unwrap().unwrap();
            let big_b = extension_cochain(&datum);
            let sum: Vec<Scalar> = big_b.differential().to_vector().iter().zip(a.to_vector()).map(|(x, y)| x + y).collect();
            assert!(sum.iter().all(Zero::is_zero));
            assert_eq!(b.differential().to_vector(), a.to_vector());
        }
    }

    #[test]
    fn trivial_module_extends_by_zero() {
        let p = borel();
        let t = p.trivial(1);
        let datum = find_extension(&p, &t).unwrap().unwrap();
        assert!(datum.rho_n(0).is_zero());
    }

    #[test]
    fn rho_in_original_coordinates() {
        let p = diagonal();
        let datum = find_extension(&p, &p.quotient_module()).unwrap().unwrap();
        // (e, e) is the first h letter
        let v: Vec<Scalar> = [1, 0, 0, 1, 0, 0].iter().map(|&x| int(x)).collect();
        assert_eq!(&datum.rho_g(&v), p.quotient_module().action(0));
    }

    #[test]
    fn pushout_is_exact_and_equivariant() {
        for p in [borel(), diagonal()] {
            let e = p.quotient_module();
            let po = pushout_module(&p, &e).unwrap();
            assert!(po.module.is_valid());
            assert_eq!(po.module.dim(), e.dim() + p.dim_n() * e.dim());
            assert!(po.inclusion.is_equivariant());
            assert!(po.projection.is_equivariant());
            assert!((&po.projection.matrix * &po.inclusion.matrix).is_zero());
        }
    }

    #[test]
    fn pushout_agrees_with_presentation() {
        // Build E ⊕ g⊗E with the relations and check that the coordinate
        // elimination is an equivariant map killing exactly the relations.
        let p = borel();
        let e = p.quotient_module();
        let (dh, dg, de) = (p.dim_h(), p.dim_g(), e.dim());
        let g_mod = p.restricted_adjoint();
        let ge = tensor_module(&g_mod, &e).unwrap();
        let dw = de + dg * de;
        let w_action: Vec<Matrix> = (0..dh)
            .map(|x| Matrix::from_fn(dw, dw, |r, c| match (r < de, c < de) {
                (true, true) => e.action(x).get(r, c).clone(),
                (false, false) => ge.action(x).get(r - de, c - de).clone(),
                _ => Scalar::zero(),
            }))
            .collect();
        let w = LieModule::new(p.h().clone(), dw, w_action).unwrap();
        assert!(w.is_valid());
        let po = pushout_module(&p, &e).unwrap();
        let dq = po.module.dim();
        let mut to_q = Matrix::zeros(dq, dw);
        for v in 0..de {
            to_q.set(v, v, int(1));
        }
        for x in 0..dg {
            for v in 0..de {
                let col = de + x * de + v;
                if x < dh {
                    for w2 in 0..de {
                        to_q.set(w2, col, e.action(x).get(w2, v).clone());
                    }
                } else {
                    to_q.set(de + (x - dh) * de + v, col, int(1));
                }
            }
        }
        assert!(ModuleMap::new(w, po.module.clone(), to_q.clone()).unwrap().is_equivariant());
        assert_eq!(to_q.rank(), dq);
        assert_eq!(dw - dq, dh * de);
        for a in 0..dh {
            for v in 0..de {
                let mut rel = vec![Scalar::zero(); dw];
                for w2 in 0..de {
                    rel[w2] = e.action(a).get(w2, v).clone();
                }
                rel[de + a * de + v] = int(-1);
                assert!(to_q.apply(&rel).iter().all(Zero::is_zero));
            }
        }
    }

    #[test]
    fn pushout_of_trivial_is_split() {
        let p = borel();
        let t = p.trivial(1);
        let po = pushout_module(&p, &t).unwrap();
        let n = p.quotient_module();
        let target = crate::lie::module::direct_sum_module(&t, &n).unwrap();
        let maps = intertwiner_basis(&po.module, &target).unwrap();
        let combo = maps.iter().fold(Matrix::zeros(2, 2), |acc, m| &acc + m);
        assert_eq!(combo.rank(), 2);
    }
}
