//! Codegree peeling: strip edges until every k-subset has codegree 0 or
//! more than `s`.

use std::collections::{BTreeSet, HashMap};

use crate::bitset::VertexSet;
use crate::combinatorics::Combinations;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PeelParams {
    pub k: usize,
    pub s: usize,
}

impl PeelParams {
    pub fn new(r: usize, k: usize, s: usize) -> Result<Self> {
        if k == 0 || k > r {
            return Err(Error::InvalidParameter(format!("k={k} outside 1..={r}")));
        }
        if s == 0 {
            return Err(Error::InvalidParameter("codegree threshold s must be ≥ 1".into()));
        }
        Ok(Self { k, s })
    }
}

/// The k-subsets of `edge`, in lexicographic order.
pub(crate) fn k_subsets(n: usize, edge: &VertexSet, k: usize) -> impl Iterator<Item = VertexSet> + '_ {
    let verts: Vec<usize> = edge.iter().collect();
    Combinations::new(verts.len(), k)
        .map(move |c| VertexSet::from_indices(n, c.into_iter().map(|i| verts[i])))
}

/// Map from each k-subset contained in some edge to the edges containing it.
pub(crate) fn codegree_index(h: &Hypergraph, k: usize) -> HashMap<VertexSet, Vec<usize>> {
    let mut index: HashMap<VertexSet, Vec<usize>> = HashMap::new();
    for (i, e) in h.edges().iter().enumerate() {
        for t in k_subsets(h.n(), e, k) {
            index.entry(t).or_default().push(i);
        }
    }
    index
}

/// Codegree of every k-subset that lies in at least one edge.
pub fn codegrees(h: &Hypergraph, k: usize) -> HashMap<VertexSet, usize> {
    codegree_index(h, k)
        .into_iter()
        .map(|(t, edges)| (t, edges.len()))
        .collect()
}

/// Repeatedly removes the lexicographically first edge containing a
/// k-subset of codegree at most `s`.
///
/// The result keeps at least `max(|H| − s·C(n,k), 0)` edges: each k-subset
/// can be responsible for at most `s` removals.
pub fn codegree_peel(h: &Hypergraph, p: PeelParams) -> Result<Hypergraph> {
    let p = PeelParams::new(h.r(), p.k, p.s)?;
    let index = codegree_index(h, p.k);
    let edge_subsets: Vec<Vec<VertexSet>> = h
        .edges()
        .iter()
        .map(|e| k_subsets(h.n(), e, p.k).collect())
        .collect();
    let mut degree: HashMap<&VertexSet, usize> =
        index.iter().map(|(t, edges)| (t, edges.len())).collect();
    let mut removed = vec![false; h.len()];

    let mut bad: BTreeSet<usize> = (0..h.len())
        .filter(|&i| edge_subsets[i].iter().any(|t| degree[t] <= p.s))
        .collect();

    while let Some(e) = bad.pop_first() {
        removed[e] = true;
        for t in &edge_subsets[e] {
            let d = degree.get_mut(t).unwrap();
            *d -= 1;
            if *d <= p.s {
                // every surviving edge through t is now removable
                for &other in &index[t] {
                    if !removed[other] {
                        bad.insert(other);
                    }
                }
            }
        }
    }

    Ok(h.subgraph((0..h.len()).filter(|&i| !removed[i])))
}
