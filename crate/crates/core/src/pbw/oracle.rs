//! Brute-force search for equivariant sections of short exact sequences.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::module::ModuleMap;
use crate::linalg::{Matrix, Scalar, SparseSystem, SparseVec};

/// An equivariant section of `p` in `0 -> A --i--> B --p--> C -> 0`, or
/// `None` when the sequence does not split.
///
/// With a linear section `s₀` and a left inverse `L` of `i`, every section is
/// `s₀ + iφ` for `φ: C -> A`, and equivariance becomes the linear system
/// `act_A(x) φ - φ act_C(x) = -L (act_B(x) s₀ - s₀ act_C(x))` for every
/// generator `x`.
pub fn section_oracle(i: &ModuleMap, p: &ModuleMap) -> Result<Option<ModuleMap>> {
    let (a, b, c) = (&i.source, &i.target, &p.target);
    a.same_algebra(c)?;
    if p.source.dim() != b.dim() {
        return Err(Error::NotExact("middle terms differ".into()));
    }
    if !(&p.matrix * &i.matrix).is_zero() {
        return Err(Error::NotExact("p ∘ i is not zero".into()));
    }
    if b.dim() != a.dim() + c.dim() {
        return Err(Error::NotExact(format!("dimensions {} -> {} -> {}", a.dim(), b.dim(), c.dim())));
    }
    if !i.is_equivariant() || !p.is_equivariant() {
        return Err(Error::NotExact("maps are not equivariant".into()));
    }
    let s0 = p.matrix.right_inverse().ok_or_else(|| Error::NotExact("p is not onto".into()))?;
    let l = i.matrix.left_inverse().ok_or_else(|| Error::NotExact("i is not injective".into()))?;
    let (da, dc) = (a.dim(), c.dim());

    let mut system = SparseSystem::new(da * dc);
    for x in 0..a.algebra().dim() {
        let z = &(b.action(x) * &s0) - &(&s0 * c.action(x));
        let rhs = -&(&l * &z);
        let (act_a, act_c) = (a.action(x), c.action(x));
        let act_a_cols: Vec<Vec<(usize, Scalar)>> = (0..da)
            .map(|r| (0..da).filter(|&k| !act_a.get(r, k).is_zero()).map(|k| (k, act_a.get(r, k).clone())).collect())
            .collect();
        let act_c_rows: Vec<Vec<(usize, Scalar)>> = (0..dc)
            .map(|col| (0..dc).filter(|&k| !act_c.get(k, col).is_zero()).map(|k| (k, act_c.get(k, col).clone())).collect())
            .collect();
        for r in 0..da {
            for col in 0..dc {
                let mut pairs = Vec::with_capacity(act_a_cols[r].len() + act_c_rows[col].len());
                for (k, v) in &act_a_cols[r] {
                    pairs.push((k * dc + col, v.clone()));
                }
                for (k, v) in &act_c_rows[col] {
                    pairs.push((r * dc + k, -v));
                }
                system.push(SparseVec::from_pairs(pairs), rhs.get(r, col).clone());
            }
        }
    }
    let Some(phi) = system.solve() else {
        return Ok(None);
    };
    let phi = Matrix::from_fn(da, dc, |r, col| phi[r * dc + col].clone());
    let s = &s0 + &(&i.matrix * &phi);
    let section = ModuleMap::new(c.clone(), b.clone(), s)?;
    if !section.is_equivariant() || &p.matrix * &section.matrix != Matrix::identity(dc) {
        return Err(Error::NotExact("solver returned an invalid section".into()));
    }
    Ok(Some(section))
}
