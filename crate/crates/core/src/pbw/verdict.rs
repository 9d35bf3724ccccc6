//! Comparisons between the obstruction class and the section oracle.

use num_traits::Zero;
use serde::Serialize;

use super::element::Combination;
use super::filtration::build_filtration;
use super::normal::{NormalForms, Side};
use super::oracle::section_oracle;
use crate::cohomology::{alpha, alpha_cocycle, is_trivial, pushout_module};
use crate::error::{Error, Result};
use crate::lie::module::ModuleMap;
use crate::lie::{InclusionPair, LieModule};
use crate::linalg::{Matrix, Scalar};

#[derive(Clone, Debug, Serialize)]
pub struct LevelVerdict {
    pub side: Side,
    pub degree: usize,
    pub predicted_split: bool,
    pub oracle_split: bool,
}

/// Level-by-level comparison of `α` with the splitting of `F̃` and `R̃`.
#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub alpha_trivial: bool,
    pub max_degree: usize,
    pub levels: Vec<LevelVerdict>,
    pub consistent: bool,
}

/// For each `1 ≤ k ≤ K` asks the oracle whether
/// `0 -> F̃^{k-1} -> F̃^k -> n^{⊗k} -> 0` (and the `R̃` analogue) splits.
///
/// Level 1 always splits (`F̃^0 = 0`); from level 2 on, splitting must hold
/// exactly when `α` is trivial.
pub fn equivalence_check(pair: &InclusionPair, max_degree: usize) -> Result<EquivalenceReport> {
    let alpha_trivial = is_trivial(&alpha(pair))?.is_some();
    let mut levels = Vec::new();
    for side in [Side::F, Side::R] {
        let f = build_filtration(pair, side, max_degree, None)?;
        for k in 1..=max_degree {
            let (i, p) = f.level_sequence(k, true)?;
            let oracle_split = section_oracle(&i, &p)?.is_some();
            levels.push(LevelVerdict { side, degree: k, predicted_split: alpha_trivial || k <= 1, oracle_split });
        }
    }
    let consistent = levels.iter().all(|l| l.predicted_split == l.oracle_split);
    Ok(EquivalenceReport { alpha_trivial, max_degree, levels, consistent })
}

/// Splitting of the filtrations with coefficients in `V` against the
/// triviality of `α` and `α_V`.
#[derive(Clone, Debug, Serialize)]
pub struct TwistedReport {
    pub alpha_trivial: bool,
    pub alpha_v_trivial: bool,
    /// `F^0` was split off (trivial one-dimensional `V`).
    pub reduced: bool,
    pub levels: Vec<LevelVerdict>,
    pub predicted_split: bool,
    pub f_split: bool,
    pub r_split: bool,
    pub consistent: bool,
}

/// `α` and `α_V` are both trivial exactly when `F ⊗ V` and `R ⊗ V` split;
/// checked on every level up to `K`.
pub fn twisted_verdict(pair: &InclusionPair, v: &LieModule, max_degree: usize) -> Result<TwistedReport> {
    let alpha_trivial = is_trivial(&alpha(pair))?.is_some();
    let alpha_v_trivial = is_trivial(&alpha_cocycle(pair, v)?)?.is_some();
    let predicted_split = alpha_trivial && alpha_v_trivial;
    let reduced = v.dim() == 1 && v.actions().iter().all(Matrix::is_zero);
    let mut levels = Vec::new();
    for side in [Side::F, Side::R] {
        let f = build_filtration(pair, side, max_degree, Some(v))?;
        for k in 1..=max_degree {
            let (i, p) = f.level_sequence(k, reduced)?;
            let oracle_split = section_oracle(&i, &p)?.is_some();
            levels.push(LevelVerdict { side, degree: k, predicted_split, oracle_split });
        }
    }
    let all = |s: Side| levels.iter().filter(|l| l.side == s).all(|l| l.oracle_split);
    let (f_split, r_split) = (all(Side::F), all(Side::R));
    let consistent = f_split == predicted_split && r_split == predicted_split;
    Ok(TwistedReport { alpha_trivial, alpha_v_trivial, reduced, levels, predicted_split, f_split, r_split, consistent })
}

/// Comparison of the pushout sequence `0 -> n -> Q -> n⊗n -> 0` with
/// `0 -> n -> F̃² -> n⊗n -> 0`.
#[derive(Clone, Debug, Serialize)]
pub struct F2Report {
    /// The map `n ⊕ g⊗n -> F̃²`, `(v, y⊗x) ↦ v + y·x`, vanishes on the
    /// relations `(a·x, 0) - (0, a⊗x)`.
    pub kills_relations: bool,
    pub left_square_commutes: bool,
    pub right_square_commutes: bool,
    pub equivariant: bool,
    pub isomorphism: bool,
    pub alpha_trivial: bool,
    pub q_split: bool,
    pub f2_split: bool,
    pub consistent: bool,
}

impl F2Report {
    /// First failing item, if any.
    pub fn first_failure(&self) -> Option<&'static str> {
        [
            (self.kills_relations, "relations"),
            (self.left_square_commutes, "left square"),
            (self.right_square_commutes, "right square"),
            (self.equivariant, "equivariance"),
            (self.isomorphism, "isomorphism"),
            (self.consistent, "splitting verdicts"),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, name)| name)
    }
}

pub fn f2_class_check(pair: &InclusionPair) -> Result<F2Report> {
    let n = pair.quotient_module();
    let (dh, dg, dn) = (pair.dim_h(), pair.dim_g(), pair.dim_n());
    let po = pushout_module(pair, &n)?;
    let f = build_filtration(pair, Side::F, 2, None)?;
    let f2 = f.reduced_level(2);
    let mut nf = NormalForms::new(pair, Side::F, &pair.trivial(1))?;

    // Ambient coordinates: `v` for n, then `dn + y * dn + x` for y ⊗ x̄.
    let dw = dn + dg * dn;
    let to_reduced = |x: &Combination<(Vec<usize>, usize)>| -> Result<Vec<Scalar>> {
        let full = f.coordinates(x)?;
        if !full[0].is_zero() {
            return Err(Error::Rewriting("degree-zero component in F̃²".into()));
        }
        Ok(full[1..f.level_dim(2)].to_vec())
    };
    let mut w_map = Matrix::zeros(f2.dim(), dw);
    for col in 0..dw {
        let image = if col < dn {
            Combination::single((vec![col], 0))
        } else {
            let (y, x) = ((col - dn) / dn, (col - dn) % dn);
            nf.left(y, &(vec![x], 0))
        };
        for (r, v) in to_reduced(&image)?.into_iter().enumerate() {
            w_map.set(r, col, v);
        }
    }
    let kills_relations = (0..dh).all(|a| {
        (0..dn).all(|x| {
            let mut rel = vec![Scalar::zero(); dw];
            for v in 0..dn {
                rel[v] = n.action(a).get(v, x).clone();
            }
            rel[dn + a * dn + x] -= Scalar::from_integer(1.into());
            w_map.apply(&rel).iter().all(Zero::is_zero)
        })
    });

    let dq = po.module.dim();
    let lift = Matrix::from_fn(dw, dq, |r, c| {
        let target = if c < dn { c } else { dn + (dh + (c - dn) / dn) * dn + (c - dn) % dn };
        if r == target {
            Scalar::from_integer(1.into())
        } else {
            Scalar::zero()
        }
    });
    let m = &w_map * &lift;
    let (f_incl, f_proj) = f.level_sequence(2, true)?;
    let left_square_commutes = &m * &po.inclusion.matrix == f_incl.matrix;
    let right_square_commutes = &f_proj.matrix * &m == po.projection.matrix;
    let map = ModuleMap::new(po.module.clone(), f2, m)?;
    let equivariant = map.is_equivariant();
    let isomorphism = map.matrix.rows() == dq && map.matrix.rank() == dq;

    let alpha_trivial = is_trivial(&alpha(pair))?.is_some();
    let q_split = section_oracle(&po.inclusion, &po.projection)?.is_some();
    let f2_split = section_oracle(&f_incl, &f_proj)?.is_some();
    let consistent = q_split == f2_split && f2_split == alpha_trivial;
    Ok(F2Report {
        kills_relations,
        left_square_commutes,
        right_square_commutes,
        equivariant,
        isomorphism,
        alpha_trivial,
        q_split,
        f2_split,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieAlgebra;

    fn borel() -> InclusionPair {
        InclusionPair::from_indices(LieAlgebra::sl2(), &[0, 1]).unwrap()
    }

    #[test]
    fn borel_equivalence() {
        let r = equivalence_check(&borel(), 4).unwrap();
        assert!(!r.alpha_trivial);
        assert!(r.consistent, "{r:?}");
        assert!(r.levels.iter().filter(|l| l.degree >= 2).all(|l| !l.oracle_split));
    }

    #[test]
    fn abelian_equivalence() {
        let p = InclusionPair::from_indices(LieAlgebra::abelian(3), &[0]).unwrap();
        let r = equivalence_check(&p, 3).unwrap();
        assert!(r.alpha_trivial && r.consistent);
    }

    #[test]
    fn f2_borel_and_diagonal() {
        let r = f2_class_check(&borel()).unwrap();
        assert_eq!(r.first_failure(), None, "{r:?}");
        assert!(!r.q_split && !r.f2_split);
        let d = InclusionPair::diagonal(&LieAlgebra::heisenberg()).unwrap();
        let r = f2_class_check(&d).unwrap();
        assert_eq!(r.first_failure(), None, "{r:?}");
        assert!(r.q_split && r.f2_split);
    }

    #[test]
    fn twisted_borel() {
        let p = borel();
        let r = twisted_verdict(&p, &p.quotient_module(), 2).unwrap();
        assert!(!r.alpha_v_trivial && !r.predicted_split && r.consistent);
        let r = twisted_verdict(&p, &p.trivial(1), 2).unwrap();
        assert!(r.reduced && r.alpha_v_trivial && r.consistent);
    }
}
