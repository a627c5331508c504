//! Explicit failure of `2·t_half`-cancellativity in hypergraphs whose
//! k-subsets all have codegree 0 or at least 3.
//!
//! Pick an edge `C`, a k-subset `X ⊆ C` and a second edge `D ⊇ X`. Split
//! `C \ X` and `D \ X` into `t_half` blocks of size `k` each and cover every
//! block by a further edge. With `W` the union of the covering edges,
//! `W ∪ C = W ∪ X = W ∪ D`.

use std::collections::HashMap;

use crate::bitset::VertexSet;
use crate::checkers::Certificate;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

use super::peel::{codegree_index, k_subsets};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CancellativityWitness {
    /// Edges covering the blocks of `C \ X`.
    pub a: Vec<VertexSet>,
    /// Edges covering the blocks of `D \ X`.
    pub b: Vec<VertexSet>,
    pub c: VertexSet,
    pub d: VertexSet,
}

impl CancellativityWitness {
    /// Checks `(∪A) ∪ (∪B) ∪ C = (∪A) ∪ (∪B) ∪ D` with `C ≠ D`.
    pub fn replay(&self) -> bool {
        let mut w = self.c.clone();
        w.clear();
        for e in self.a.iter().chain(&self.b) {
            w.union_with(e);
        }
        self.c != self.d && w.union(&self.c) == w.union(&self.d)
    }

    /// The witness as a cancellative certificate with `t = 2·t_half`.
    pub fn to_certificate(&self) -> Certificate {
        let mut others: Vec<VertexSet> = self.a.iter().chain(&self.b).cloned().collect();
        others.sort();
        Certificate::Cancellative {
            others,
            b: self.c.clone(),
            c: self.d.clone(),
        }
    }
}

/// Partitions of `items` into blocks of size `k`, first block always taking
/// the smallest remaining item.
fn block_partitions(items: &[usize], k: usize) -> Vec<Vec<Vec<usize>>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let first = items[0];
    let rest = &items[1..];
    let mut out = Vec::new();
    for combo in crate::combinatorics::Combinations::new(rest.len(), k - 1) {
        let mut block = vec![first];
        block.extend(combo.iter().map(|&i| rest[i]));
        let remaining: Vec<usize> = rest
            .iter()
            .enumerate()
            .filter(|(i, _)| !combo.contains(i))
            .map(|(_, &v)| v)
            .collect();
        for mut tail in block_partitions(&remaining, k) {
            tail.insert(0, block.clone());
            out.push(tail);
        }
    }
    out
}

/// Builds `(A_1..A_t_half, B_1..B_t_half, C, D)` with equal unions.
///
/// Preconditions: `h` is `(t_half+1)·k`-uniform, every k-subset has
/// codegree 0 or ≥ 3, and `|h| ≥ 2·t_half + 2`.
pub fn cancellativity_witness(
    h: &Hypergraph,
    t_half: usize,
    k: usize,
) -> Result<CancellativityWitness> {
    if t_half == 0 || k == 0 {
        return Err(Error::InvalidParameter("t_half and k must be positive".into()));
    }
    if h.r() != (t_half + 1) * k {
        return Err(Error::Precondition(format!(
            "hypergraph is {}-uniform, expected (t_half+1)·k = {}",
            h.r(),
            (t_half + 1) * k
        )));
    }
    if h.len() < 2 * t_half + 2 {
        return Err(Error::Precondition(format!(
            "need at least {} edges, have {}",
            2 * t_half + 2,
            h.len()
        )));
    }
    let index = codegree_index(h, k);
    let mut low: Vec<&VertexSet> = index
        .iter()
        .filter(|(_, e)| e.len() < 3)
        .map(|(t, _)| t)
        .collect();
    low.sort();
    if let Some(t) = low.first() {
        return Err(Error::Precondition(format!(
            "k-subset {:?} has codegree {} (need 0 or ≥ 3)",
            t.to_vertices(),
            index[*t].len()
        )));
    }

    for (ci, c) in h.edges().iter().enumerate() {
        for x in k_subsets(h.n(), c, k) {
            for &di in &index[&x] {
                if di == ci {
                    continue;
                }
                let d = h.edge(di);
                let c_rest: Vec<usize> = c.difference(&x).iter().collect();
                let d_rest: Vec<usize> = d.difference(&x).iter().collect();
                for pc in block_partitions(&c_rest, k) {
                    for pd in block_partitions(&d_rest, k) {
                        let blocks: Vec<VertexSet> = pc
                            .iter()
                            .chain(&pd)
                            .map(|b| VertexSet::from_indices(h.n(), b.iter().copied()))
                            .collect();
                        let mut chosen = vec![ci, di];
                        if assign_covers(&index, &blocks, &mut chosen) {
                            let sets: Vec<VertexSet> =
                                chosen[2..].iter().map(|&i| h.edge(i).clone()).collect();
                            let (a, b) = sets.split_at(t_half);
                            return Ok(CancellativityWitness {
                                a: a.to_vec(),
                                b: b.to_vec(),
                                c: c.clone(),
                                d: d.clone(),
                            });
                        }
                    }
                }
            }
        }
    }
    Err(Error::Precondition(
        "no choice of C, X, D and block covers yields distinct covering edges".into(),
    ))
}

/// Assigns to each block the lowest-index edge containing it that is
/// distinct from everything in `chosen`, backtracking on dead ends.
fn assign_covers(
    index: &HashMap<VertexSet, Vec<usize>>,
    blocks: &[VertexSet],
    chosen: &mut Vec<usize>,
) -> bool {
    let Some((block, rest)) = blocks.split_first() else {
        return true;
    };
    for &e in &index[block] {
        if chosen.contains(&e) {
            continue;
        }
        chosen.push(e);
        if assign_covers(index, rest, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkers::{check_cancellative, replay_certificate};

    #[test]
    fn k4_yields_witness() {
        let h = Hypergraph::new(4, 2, [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]).unwrap();
        // brute force: K4 is not 2-cancellative
        assert!(!check_cancellative(&h, 2).holds);
        let w = cancellativity_witness(&h, 1, 1).unwrap();
        assert!(w.replay());
        assert!(replay_certificate(&h, &w.to_certificate()).unwrap());
        // C = {1,2}, X = {1}, D = {1,3}; block {2} → {2,3}, block {3} → {3,4}
        assert_eq!(w.c.to_vertices(), vec![1, 2]);
        assert_eq!(w.d.to_vertices(), vec![1, 3]);
        assert_eq!(w.a[0].to_vertices(), vec![2, 3]);
        assert_eq!(w.b[0].to_vertices(), vec![3, 4]);
    }

    #[test]
    fn matching_fails_precondition() {
        let h = Hypergraph::new(8, 2, [[1, 2], [3, 4], [5, 6], [7, 8]]).unwrap();
        let err = cancellativity_witness(&h, 1, 1).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn wrong_uniformity() {
        let h = Hypergraph::new(4, 3, [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]).unwrap();
        assert!(cancellativity_witness(&h, 1, 1).is_err());
    }

    #[test]
    fn block_partitions_count() {
        assert_eq!(block_partitions(&[1, 2, 3, 4], 2).len(), 3);
        assert_eq!(block_partitions(&[1, 2, 3, 4, 5, 6], 2).len(), 15);
        assert_eq!(block_partitions(&[7], 1), vec![vec![vec![7]]]);
    }
}
