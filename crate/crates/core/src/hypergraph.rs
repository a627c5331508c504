//! Uniform hypergraphs, vertex partitions, sparsity constraints and the
//! canonical text format.
//!
//! Edges are kept sorted in lexicographic order of their vertex lists, so
//! edge indices are canonical and every search that walks indices in
//! increasing order reports lexicographically first results.

use std::fmt;
use std::io::{BufRead, Write};
use std::ops::ControlFlow;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// File format magic line.
pub const FORMAT_HEADER: &str = "# hypergraph v1";

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Builds a canonical hypergraph from 1-based vertex lists.
    pub fn new<I, E>(n: usize, r: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        check_dims(n, r)?;
        let mut sets = Vec::new();
        for edge in edges {
            let edge = edge.as_ref();
            let mut set = VertexSet::empty(n);
            for &v in edge {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                set.insert(v - 1);
            }
            if set.len() != r || edge.len() != r {
                let mut sorted = edge.to_vec();
                sorted.sort_unstable();
                return Err(Error::WrongEdgeSize {
                    edge: sorted,
                    expected: r,
                    got: set.len(),
                });
            }
            sets.push(set);
        }
        Self::from_sets(n, r, sets)
    }

    /// Builds a canonical hypergraph from bitmask edges.
    pub fn from_sets(n: usize, r: usize, mut edges: Vec<VertexSet>) -> Result<Self> {
        check_dims(n, r)?;
        let words = VertexSet::empty(n).word_count();
        for e in &edges {
            if e.word_count() != words || e.iter().any(|v| v >= n) {
                return Err(Error::VertexOutOfRange {
                    vertex: e.iter().last().map_or(0, |v| v + 1),
                    n,
                });
            }
            if e.len() != r {
                return Err(Error::WrongEdgeSize {
                    edge: e.to_vertices(),
                    expected: r,
                    got: e.len(),
                });
            }
        }
        edges.sort();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].to_vertices()));
        }
        Ok(Self { n, r, edges })
    }

    pub(crate) fn from_sorted_unchecked(n: usize, r: usize, edges: Vec<VertexSet>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Self { n, r, edges }
    }

    /// Hypergraph with no edges.
    pub fn empty(n: usize, r: usize) -> Result<Self> {
        check_dims(n, r)?;
        Ok(Self {
            n,
            r,
            edges: Vec::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &VertexSet {
        &self.edges[i]
    }

    /// Canonical index of `edge`, if present.
    pub fn index_of(&self, edge: &VertexSet) -> Option<usize> {
        self.edges.binary_search(edge).ok()
    }

    /// Edge lists as 1-based vertex ids.
    pub fn edge_lists(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(VertexSet::to_vertices).collect()
    }

    /// Subhypergraph keeping the edges at `indices`.
    pub fn subgraph<I: IntoIterator<Item = usize>>(&self, indices: I) -> Self {
        let mut idx: Vec<usize> = indices.into_iter().collect();
        idx.sort_unstable();
        idx.dedup();
        let edges = idx.into_iter().map(|i| self.edges[i].clone()).collect();
        Self::from_sorted_unchecked(self.n, self.r, edges)
    }

    /// Subhypergraph of edges satisfying `keep`.
    pub fn filter<F: FnMut(&VertexSet) -> bool>(&self, mut keep: F) -> Self {
        let edges = self.edges.iter().filter(|e| keep(e)).cloned().collect();
        Self::from_sorted_unchecked(self.n, self.r, edges)
    }

    /// For each vertex (0-based), the increasing list of edge indices containing it.
    pub fn incidence(&self) -> Vec<Vec<u32>> {
        incidence_of(self.n, &self.edges)
    }

    pub fn union_of<'a, I: IntoIterator<Item = &'a usize>>(&self, indices: I) -> VertexSet {
        let mut u = VertexSet::empty(self.n);
        for &i in indices {
            u.union_with(&self.edges[i]);
        }
        u
    }

    /// Canonical text serialization.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        w.write_all(self.to_string().as_bytes())
    }

    pub fn read_from<R: BufRead>(mut reader: R) -> Result<Self> {
        let mut text = String::new();
        reader.read_to_string(&mut text)?;
        text.parse()
    }
}

fn check_dims(n: usize, r: usize) -> Result<()> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "vertex count {n} outside 1..={MAX_VERTICES}"
        )));
    }
    if r == 0 || r > n {
        return Err(Error::InvalidParameter(format!(
            "uniformity {r} outside 1..={n}"
        )));
    }
    Ok(())
}

pub(crate) fn incidence_of(n: usize, edges: &[VertexSet]) -> Vec<Vec<u32>> {
    let mut inc = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        for v in e.iter() {
            inc[v].push(i as u32);
        }
    }
    inc
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{FORMAT_HEADER}")?;
        writeln!(f, "n={} r={} m={}", self.n, self.r, self.edges.len())?;
        for e in &self.edges {
            let mut first = true;
            for v in e.iter() {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", v + 1)?;
                first = false;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph")
            .field("n", &self.n)
            .field("r", &self.r)
            .field("edges", &self.edges)
            .finish()
    }
}

impl FromStr for Hypergraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r')));
        let parse_err = |line: usize, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };

        match lines.next() {
            Some((_, l)) if l.trim() == FORMAT_HEADER => {}
            Some((i, _)) => return Err(parse_err(i, "expected `# hypergraph v1`")),
            None => return Err(parse_err(1, "empty input")),
        }

        let (hline, header) = lines.next().ok_or_else(|| parse_err(2, "missing header"))?;
        let (mut n, mut r, mut m) = (None, None, None);
        for tok in header.split_whitespace() {
            let (key, val) = tok
                .split_once('=')
                .ok_or_else(|| parse_err(hline, "malformed header field"))?;
            let val: usize = val
                .parse()
                .map_err(|_| parse_err(hline, "header value is not an integer"))?;
            match key {
                "n" => n = Some(val),
                "r" => r = Some(val),
                "m" => m = Some(val),
                _ => return Err(parse_err(hline, "unknown header field")),
            }
        }
        let (n, r, m) = match (n, r, m) {
            (Some(n), Some(r), Some(m)) => (n, r, m),
            _ => return Err(parse_err(hline, "header must be `n=<n> r=<r> m=<m>`")),
        };
        check_dims(n, r)?;

        let mut edges = Vec::with_capacity(m);
        for (i, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let verts = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| parse_err(i, "vertex id is not an integer"))?;
            if verts.len() != r {
                return Err(Error::WrongEdgeSize {
                    edge: verts.clone(),
                    expected: r,
                    got: verts.len(),
                });
            }
            edges.push(verts);
        }
        if edges.len() != m {
            return Err(Error::CountMismatch {
                declared: m,
                found: edges.len(),
            });
        }
        Hypergraph::new(n, r, edges)
    }
}

/// A family of pairwise-disjoint vertex sets `V_1..V_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<VertexSet>,
}

impl Partition {
    pub fn new(parts: Vec<VertexSet>) -> Result<Self> {
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i + 1..] {
                if a.intersects(b) {
                    return Err(Error::InvalidParameter("partition parts overlap".into()));
                }
            }
        }
        Ok(Self { parts })
    }

    /// From 1-based vertex lists.
    pub fn from_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let mut parts = Vec::with_capacity(lists.len());
        for list in lists {
            let mut s = VertexSet::empty(n);
            for &v in list {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                s.insert(v - 1);
            }
            parts.push(s);
        }
        Self::new(parts)
    }

    /// From a per-vertex part assignment (0-based vertices).
    pub(crate) fn from_assignment(n: usize, r: usize, assign: &[usize]) -> Self {
        let mut parts = vec![VertexSet::empty(n); r];
        for (v, &p) in assign.iter().enumerate() {
            parts[p].insert(v);
        }
        Self { parts }
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    /// True iff `edge` meets every part in exactly one vertex.
    pub fn is_crossing(&self, edge: &VertexSet) -> bool {
        self.parts.iter().all(|p| p.intersection_len(edge) == 1)
    }

    /// The vertex of `edge` lying in part `i`, if unique.
    pub fn vertex_in_part(&self, edge: &VertexSet, i: usize) -> Option<usize> {
        let inter = edge.intersection(&self.parts[i]);
        (inter.len() == 1).then(|| inter.first().unwrap())
    }

    pub fn part_lists(&self) -> Vec<Vec<usize>> {
        self.parts.iter().map(VertexSet::to_vertices).collect()
    }
}

/// `𝒢_r(v, e)`-freeness: every `e` distinct edges span at least `v + 1` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SparsityConstraint {
    pub v: usize,
    pub e: usize,
}

impl SparsityConstraint {
    /// Validates `v ≥ r + 1` and `e ≥ 2`.
    pub fn new(r: usize, v: usize, e: usize) -> Result<Self> {
        let c = Self { v, e };
        c.validate(r)?;
        Ok(c)
    }

    pub fn validate(&self, r: usize) -> Result<()> {
        if self.v < r + 1 || self.e < 2 {
            return Err(Error::InvalidParameter(format!(
                "sparsity constraint (v={}, e={}) needs v ≥ r+1 = {} and e ≥ 2",
                self.v,
                self.e,
                r + 1
            )));
        }
        Ok(())
    }

    /// Alteration exponent `(e·r − v)/(e − 1)`.
    pub fn exponent(&self, r: usize) -> Ratio<i64> {
        Ratio::new(
            self.e as i64 * r as i64 - self.v as i64,
            self.e as i64 - 1,
        )
    }
}

impl fmt::Display for SparsityConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.v, self.e)
    }
}

/// Indices `j > last(prefix)` with `|∪prefix ∪ edge_j| ≤ bound`.
pub fn enumerate_extensions<'a>(
    h: &'a Hypergraph,
    prefix: &[usize],
    bound: usize,
) -> impl Iterator<Item = usize> + 'a {
    let union = h.union_of(prefix);
    let start = prefix.last().map_or(0, |&l| l + 1);
    (start..h.len()).filter(move |&j| union.union_len(&h.edges[j]) <= bound)
}

/// Prefix-pruned search for edge subsets of a fixed size whose union stays
/// within a vertex bound. Candidates are drawn from the incidence lists of
/// the current union whenever no disjoint edge could fit.
pub(crate) struct BoundedSubsets<'a> {
    edges: &'a [VertexSet],
    incidence: Vec<Vec<u32>>,
    n: usize,
    r: usize,
}

impl<'a> BoundedSubsets<'a> {
    pub fn new(n: usize, r: usize, edges: &'a [VertexSet]) -> Self {
        Self {
            edges,
            incidence: incidence_of(n, edges),
            n,
            r,
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    /// Visits every increasing index tuple of length `size` starting at
    /// `root` whose union has at most `bound` vertices, in lexicographic order.
    pub fn visit_root<F>(&self, root: usize, size: usize, bound: usize, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if size == 0 || self.edges[root].len() > bound {
            return ControlFlow::Continue(());
        }
        let mut tuple = Vec::with_capacity(size);
        tuple.push(root);
        let mut unions = vec![VertexSet::empty(self.n); size];
        unions[0].copy_from(&self.edges[root]);
        let mut stamp = vec![0u32; self.edges.len()];
        let mut epoch = 0u32;
        self.extend(&mut tuple, &mut unions, size, bound, &mut stamp, &mut epoch, f)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend<F>(
        &self,
        tuple: &mut Vec<usize>,
        unions: &mut [VertexSet],
        size: usize,
        bound: usize,
        stamp: &mut [u32],
        epoch: &mut u32,
        f: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let depth = tuple.len();
        if depth == size {
            return f(tuple);
        }
        let last = *tuple.last().unwrap();
        let cur_len = unions[depth - 1].len();
        let slack = bound - cur_len;
        let candidates: Vec<usize> = if slack >= self.r {
            (last + 1..self.edges.len()).collect()
        } else {
            *epoch += 1;
            let mut c = Vec::new();
            for v in unions[depth - 1].iter() {
                for &j in &self.incidence[v] {
                    let j = j as usize;
                    if j > last && stamp[j] != *epoch {
                        stamp[j] = *epoch;
                        c.push(j);
                    }
                }
            }
            c.sort_unstable();
            c
        };
        for j in candidates {
            if self.edges[j].difference_len(&unions[depth - 1]) > slack {
                continue;
            }
            let (head, tail) = unions.split_at_mut(depth);
            tail[0].copy_from(&head[depth - 1]);
            tail[0].union_with(&self.edges[j]);
            tuple.push(j);
            let flow = self.extend(tuple, unions, size, bound, stamp, epoch, f);
            tuple.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}
