//! Counting and ranking helpers for k-subsets.

/// `C(n, k)`, or `None` on `u128` overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// `Σ_{a=1..=k} C(n, a)`, saturating.
pub fn partial_binomial_sum(n: u64, k: u64) -> u128 {
    (1..=k.min(n))
        .map(|a| binomial(n, a).unwrap_or(u128::MAX))
        .fold(0u128, |acc, x| acc.saturating_add(x))
}

/// The `rank`-th k-subset of `0..n` in lexicographic order.
pub fn unrank_combination(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0usize;
    for slot in 0..k {
        let remaining = k - slot;
        loop {
            // number of completions when the current slot takes `next`
            let count = binomial((n - next - 1) as u64, (remaining - 1) as u64)
                .expect("rank space already fits in u128");
            if rank < count {
                out.push(next);
                next += 1;
                break;
            }
            rank -= count;
            next += 1;
        }
    }
    out
}

/// Lexicographic k-combinations of `0..n`, as index vectors.
pub struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] != i + self.n - k {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(40, 3), Some(9880));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial(0, 0), Some(1));
        assert_eq!(partial_binomial_sum(4, 2), 10);
    }

    #[test]
    fn unrank_matches_enumeration() {
        for (n, k) in [(6, 3), (7, 2), (5, 5), (5, 1)] {
            for (rank, combo) in Combinations::new(n, k).enumerate() {
                assert_eq!(unrank_combination(n, k, rank as u128), combo);
            }
        }
    }

    #[test]
    fn combinations_count() {
        assert_eq!(Combinations::new(7, 3).count(), 35);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }
}
