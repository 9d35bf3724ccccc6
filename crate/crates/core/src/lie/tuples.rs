//! Index tuples for tensor, symmetric and exterior bases.

/// All words of length `k` over `0..n`, lexicographic (first letter major).
pub fn words(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..n).map(move |c| {
                    let mut w2 = w.clone();
                    w2.push(c);
                    w2
                })
            })
            .collect();
    }
    out
}

/// Weakly increasing `k`-tuples over `0..n`, lexicographic.
pub fn weakly_increasing(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..n {
            cur.push(c);
            go(n, k, c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Strictly increasing `k`-tuples over `0..n`, lexicographic.
pub fn strictly_increasing(n: usize, k: usize) -> Vec<Vec<usize>> {
    weakly_increasing(n, k).into_iter().filter(|t| t.windows(2).all(|w| w[0] < w[1])).collect()
}

/// Index of a word in the lexicographic enumeration of [`words`].
pub fn word_index(n: usize, word: &[usize]) -> usize {
    word.iter().fold(0, |acc, &c| acc * n + c)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Sorts `t` and returns the permutation sign, or `None` on a repeated entry.
pub fn sort_with_sign(t: &[usize]) -> Option<(i64, Vec<usize>)> {
    let mut v = t.to_vec();
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((sign, v))
    }
}

/// All permutations of `0..k` with their signs.
pub fn permutations(k: usize) -> Vec<(i64, Vec<usize>)> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..k).collect(), &mut Vec::new(), &mut out);
    out.into_iter().map(|p| (sort_with_sign(&p).expect("distinct").0, p)).collect()
}
