//! Coproduct and antipode on words of primitive generators.

/// `Δ(x₁…x_m)` for primitive letters: the sum over all ways of splitting the
/// word into a subsequence and its complement, each term `(left, right)`.
pub fn coproduct_word(word: &[usize]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let m = word.len();
    let mut out = Vec::with_capacity(1 << m);
    for mask in 0..1usize << m {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (i, &x) in word.iter().enumerate() {
            if mask >> i & 1 == 1 {
                left.push(x);
            } else {
                right.push(x);
            }
        }
        out.push((left, right));
    }
    out
}

/// `S(x₁…x_m) = (-1)^m x_m…x₁`.
pub fn antipode_word(word: &[usize]) -> (i64, Vec<usize>) {
    let sign = if word.len().is_multiple_of(2) { 1 } else { -1 };
    (sign, word.iter().rev().copied().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::tuples::binomial;

    #[test]
    fn small_coproducts() {
        assert_eq!(coproduct_word(&[]), vec![(vec![], vec![])]);
        let mut d = coproduct_word(&[7]);
        d.sort();
        assert_eq!(d, vec![(vec![], vec![7]), (vec![7], vec![])]);
        let mut d = coproduct_word(&[0, 1]);
        d.sort();
        assert_eq!(d, vec![(vec![], vec![0, 1]), (vec![0], vec![1]), (vec![0, 1], vec![]), (vec![1], vec![0])]);
    }

    #[test]
    fn antipode() {
        assert_eq!(antipode_word(&[]), (1, vec![]));
        assert_eq!(antipode_word(&[1, 2, 3]), (-1, vec![3, 2, 1]));
    }

    #[test]
    fn coproduct_counts() {
        let d = coproduct_word(&[0, 1, 2, 0]);
        assert_eq!(d.len(), 16);
        for k in 0..=4 {
            assert_eq!(d.iter().filter(|(l, _)| l.len() == k).count(), binomial(4, k));
        }
    }

    #[test]
    fn antipode_axiom_vanishes() {
        // m ∘ (S ⊗ id) ∘ Δ = 0 on non-empty words, in the free algebra.
        use std::collections::BTreeMap;
        for word in [vec![0], vec![0, 1], vec![2, 0, 1]] {
            let mut acc: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
            for (l, r) in coproduct_word(&word) {
                let (s, mut w) = antipode_word(&l);
                w.extend(r);
                *acc.entry(w).or_default() += s;
            }
            assert!(acc.values().all(|&x| x == 0), "{word:?}");
        }
    }
}
