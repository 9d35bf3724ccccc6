use std::collections::BTreeMap;

use num_traits::Zero;

use crate::linalg::Scalar;

/// Finite linear combination of basis keys with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combination<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

/// Combination of free words over the `n` letters.
pub type FreeWordElement = Combination<Vec<usize>>;
/// Combination of weakly increasing tuples over the `n` letters.
pub type OrderedMonomialElement = Combination<Vec<usize>>;
/// Element of `U(h⁽¹⁾) ⊗_{U(h)} n^{⊗j}`: (free word, tensor basis tuple).
pub type InducedElement = Combination<(Vec<usize>, Vec<usize>)>;

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Combination { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(key: K) -> Self {
        let mut c = Self::new();
        c.add_term(key, Scalar::from_integer(1.into()));
        c
    }

    pub fn add_term(&mut self, key: K, coef: Scalar) {
        if coef.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(x) => {
                *x += coef;
                if x.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coef);
            }
        }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, s: &Scalar, other: &Combination<K>) {
        if s.is_zero() {
            return;
        }
        for (k, x) in &other.terms {
            self.add_term(k.clone(), s * x);
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::new();
        out.add_scaled(s, self);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> Combination<L> {
        let mut out = Combination::new();
        for (k, x) in &self.terms {
            out.add_term(f(k), x.clone());
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for Combination<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (k, x) in iter {
            out.add_term(k, x);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    #[test]
    fn cancellation_prunes() {
        let mut c: FreeWordElement = Combination::single(vec![0, 1]);
        c.add_term(vec![1], int(2));
        c.add_term(vec![0, 1], int(-1));
        assert_eq!(c.len(), 1);
        assert_eq!(c.get(&vec![1]), int(2));
        assert!(c.scale(&int(0)).is_zero());
    }
}
