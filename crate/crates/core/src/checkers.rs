//! Exact decision procedures for the four hypergraph properties.
//!
//! Each checker returns a [`PropertyVerdict`]; on failure it carries a
//! [`Certificate`] naming the violating edges. Certificates are
//! lexicographically minimal in edge-index order, so results are the same
//! whether the search runs sequentially or split across threads:
//!
//! * sparse: the first `e`-subset (as an increasing index tuple);
//! * cancellative: minimal `(B, C)` with `B < C`, then the minimal sorted `A`;
//! * cover-free: minimal `B`, then the minimal sorted `A`;
//! * union-free: the first collision when subfamilies are enumerated by
//!   size and then lexicographically.

use std::collections::HashMap;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::combinatorics::partial_binomial_sum;
use crate::error::{Error, Result};
use crate::hypergraph::{incidence_of, BoundedSubsets, Hypergraph, SparsityConstraint};

/// Default cap on subfamily evaluations in the union-free check.
pub const DEFAULT_UNION_FREE_BUDGET: u128 = 1_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    Cancellative { t: usize },
    UnionFree { t: usize },
    CoverFree { t: usize },
    Sparse(SparsityConstraint),
}

impl Property {
    pub fn kind(&self) -> CertificateKind {
        match self {
            Property::Cancellative { .. } => CertificateKind::Cancellative,
            Property::UnionFree { .. } => CertificateKind::UnionFree,
            Property::CoverFree { .. } => CertificateKind::CoverFree,
            Property::Sparse(_) => CertificateKind::Sparse,
        }
    }

    /// Checks parameter ranges for hypergraphs of uniformity `r`.
    pub fn validate(&self, r: usize) -> Result<()> {
        match *self {
            Property::Cancellative { t } | Property::UnionFree { t } | Property::CoverFree { t } => {
                if t == 0 {
                    return Err(Error::InvalidParameter("t must be at least 1".into()));
                }
                Ok(())
            }
            Property::Sparse(c) => c.validate(r),
        }
    }

    /// Builds a property from its CLI name.
    pub fn parse(name: &str, t: Option<usize>, v: Option<usize>, e: Option<usize>) -> Result<Self> {
        let need_t = || t.ok_or_else(|| Error::InvalidParameter(format!("--t is required for {name}")));
        Ok(match name.parse::<CertificateKind>()? {
            CertificateKind::Cancellative => Property::Cancellative { t: need_t()? },
            CertificateKind::UnionFree => Property::UnionFree { t: need_t()? },
            CertificateKind::CoverFree => Property::CoverFree { t: need_t()? },
            CertificateKind::Sparse => match (v, e) {
                (Some(v), Some(e)) => Property::Sparse(SparsityConstraint { v, e }),
                _ => return Err(Error::InvalidParameter("sparse needs --v and --e".into())),
            },
        })
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Cancellative { t } => write!(f, "cancellative(t={t})"),
            Property::UnionFree { t } => write!(f, "union-free(t={t})"),
            Property::CoverFree { t } => write!(f, "cover-free(t={t})"),
            Property::Sparse(c) => write!(f, "sparse(v={},e={})", c.v, c.e),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    Cancellative,
    UnionFree,
    CoverFree,
    Sparse,
}

impl FromStr for CertificateKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cancellative" => Ok(Self::Cancellative),
            "union-free" | "union_free" => Ok(Self::UnionFree),
            "cover-free" | "cover_free" => Ok(Self::CoverFree),
            "sparse" => Ok(Self::Sparse),
            _ => Err(Error::InvalidParameter(format!("unknown property `{s}`"))),
        }
    }
}

/// A violating configuration of edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `(∪ others) ∪ b = (∪ others) ∪ c`.
    Cancellative {
        others: Vec<VertexSet>,
        b: VertexSet,
        c: VertexSet,
    },
    /// Two distinct subfamilies with equal unions.
    UnionFree {
        left: Vec<VertexSet>,
        right: Vec<VertexSet>,
    },
    /// `b ⊆ ∪ others`.
    CoverFree { others: Vec<VertexSet>, b: VertexSet },
    /// `constraint.e` edges spanning at most `constraint.v` vertices.
    Sparse {
        constraint: SparsityConstraint,
        edges: Vec<VertexSet>,
    },
}

impl Certificate {
    pub fn kind(&self) -> CertificateKind {
        match self {
            Certificate::Cancellative { .. } => CertificateKind::Cancellative,
            Certificate::UnionFree { .. } => CertificateKind::UnionFree,
            Certificate::CoverFree { .. } => CertificateKind::CoverFree,
            Certificate::Sparse { .. } => CertificateKind::Sparse,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let lists = |v: &[VertexSet]| v.iter().map(VertexSet::to_vertices).collect::<Vec<_>>();
        match self {
            Certificate::Cancellative { others, b, c } => serde_json::json!({
                "kind": self.kind(),
                "A": lists(others),
                "B": b.to_vertices(),
                "C": c.to_vertices(),
            }),
            Certificate::UnionFree { left, right } => serde_json::json!({
                "kind": self.kind(),
                "A": lists(left),
                "B": lists(right),
            }),
            Certificate::CoverFree { others, b } => serde_json::json!({
                "kind": self.kind(),
                "A": lists(others),
                "B": b.to_vertices(),
            }),
            Certificate::Sparse { constraint, edges } => serde_json::json!({
                "kind": self.kind(),
                "v": constraint.v,
                "e": constraint.e,
                "edges": lists(edges),
            }),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[VertexSet]| {
            v.iter()
                .map(|e| format!("{:?}", e.to_vertices()))
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            Certificate::Cancellative { others, b, c } => write!(
                f,
                "cancellative violation: A = {} ; B = {:?} ; C = {:?}",
                list(others),
                b.to_vertices(),
                c.to_vertices()
            ),
            Certificate::UnionFree { left, right } => write!(
                f,
                "union-free violation: A = {} ; B = {}",
                list(left),
                list(right)
            ),
            Certificate::CoverFree { others, b } => write!(
                f,
                "cover-free violation: A = {} ; B = {:?}",
                list(others),
                b.to_vertices()
            ),
            Certificate::Sparse { constraint, edges } => write!(
                f,
                "sparse violation (v={}, e={}): {}",
                constraint.v,
                constraint.e,
                list(edges)
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyVerdict {
    pub holds: bool,
    pub certificate: Option<Certificate>,
}

impl PropertyVerdict {
    pub fn holds() -> Self {
        Self {
            holds: true,
            certificate: None,
        }
    }

    pub fn violated(cert: Certificate) -> Self {
        Self {
            holds: false,
            certificate: Some(cert),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "holds": self.holds,
            "certificate": self.certificate.as_ref().map(Certificate::to_json),
        })
    }
}

/// Dispatches to the checker for `property`.
pub fn check(h: &Hypergraph, property: &Property) -> Result<PropertyVerdict> {
    property.validate(h.r())?;
    Ok(match *property {
        Property::Cancellative { t } => check_cancellative(h, t),
        Property::UnionFree { t } => return check_union_free(h, t),
        Property::CoverFree { t } => check_cover_free(h, t),
        Property::Sparse(c) => check_sparse(h, c),
    })
}

/// Holds iff every `c.e` distinct edges span at least `c.v + 1` vertices.
pub fn check_sparse(h: &Hypergraph, c: SparsityConstraint) -> PropertyVerdict {
    match first_bounded_subset(h.n(), h.r(), h.edges(), c.e, c.v) {
        None => PropertyVerdict::holds(),
        Some(idx) => PropertyVerdict::violated(Certificate::Sparse {
            constraint: c,
            edges: idx.into_iter().map(|i| h.edge(i).clone()).collect(),
        }),
    }
}

/// The lexicographically first `size`-subset of `edges` with union ≤ `bound`.
pub(crate) fn first_bounded_subset(
    n: usize,
    r: usize,
    edges: &[VertexSet],
    size: usize,
    bound: usize,
) -> Option<Vec<usize>> {
    if edges.len() < size || size == 0 {
        return None;
    }
    let search = BoundedSubsets::new(n, r, edges);
    (0..edges.len()).into_par_iter().find_map_first(|root| {
        let mut found = None;
        let _ = search.visit_root(root, size, bound, &mut |tuple: &[usize]| {
            found = Some(tuple.to_vec());
            ControlFlow::Break(())
        });
        found
    })
}

/// Exact-cover style search: can `target` be covered by few edges?
pub(crate) struct CoverIndex<'a> {
    edges: &'a [VertexSet],
    incidence: Vec<Vec<u32>>,
    r: usize,
}

impl<'a> CoverIndex<'a> {
    pub fn new(n: usize, r: usize, edges: &'a [VertexSet]) -> Self {
        Self {
            edges,
            incidence: incidence_of(n, edges),
            r,
        }
    }

    /// True iff some set of at most `slots` edges, with index greater than
    /// `after` (when given) and not in `excluded`, has union ⊇ `target`.
    pub fn coverable(
        &self,
        target: &VertexSet,
        slots: usize,
        after: Option<usize>,
        excluded: &[usize],
    ) -> bool {
        let Some(u) = target.first() else {
            return true;
        };
        if slots == 0 || target.len() > slots * self.r {
            return false;
        }
        let mut rest = target.clone();
        for &j in &self.incidence[u] {
            let j = j as usize;
            if after.is_some_and(|a| j <= a) || excluded.contains(&j) {
                continue;
            }
            rest.copy_from(target);
            rest.difference_with(&self.edges[j]);
            if self.coverable(&rest, slots - 1, after, excluded) {
                return true;
            }
        }
        false
    }

    /// Lexicographically least sorted `slots`-tuple of edges outside
    /// `excluded` whose union covers `target`. Padding edges are allowed.
    pub fn lex_min_cover(
        &self,
        target: &VertexSet,
        slots: usize,
        excluded: &[usize],
    ) -> Option<Vec<usize>> {
        let m = self.edges.len();
        let available_after = |j: Option<usize>| {
            let start = j.map_or(0, |j| j + 1);
            (start..m).filter(|i| !excluded.contains(i)).count()
        };
        if available_after(None) < slots || !self.coverable(target, slots, None, excluded) {
            return None;
        }
        let mut chosen = Vec::with_capacity(slots);
        let mut remaining = target.clone();
        let mut prev: Option<usize> = None;
        for pos in 0..slots {
            let after_slots = slots - pos - 1;
            let start = prev.map_or(0, |p| p + 1);
            let mut picked = None;
            for j in start..m {
                if excluded.contains(&j) {
                    continue;
                }
                let rest = remaining.difference(&self.edges[j]);
                if available_after(Some(j)) >= after_slots
                    && self.coverable(&rest, after_slots, Some(j), excluded)
                {
                    picked = Some((j, rest));
                    break;
                }
            }
            let (j, rest) = picked.expect("feasibility was established before descent");
            chosen.push(j);
            remaining = rest;
            prev = Some(j);
        }
        Some(chosen)
    }
}

/// Holds iff no `t + 2` distinct edges `A_1..A_t, B, C` satisfy
/// `(∪A_i) ∪ B = (∪A_i) ∪ C`.
///
/// Runs the cover formulation: for `|H| ≥ t + 2` a violation exists iff some
/// pair `B ≠ C` has `B △ C` covered by at most `t` edges of `H \ {B, C}`.
pub fn check_cancellative(h: &Hypergraph, t: usize) -> PropertyVerdict {
    let m = h.len();
    if t == 0 || m < t + 2 {
        return PropertyVerdict::holds();
    }
    let index = CoverIndex::new(h.n(), h.r(), h.edges());
    let found = (0..m).into_par_iter().find_map_first(|b| {
        (b + 1..m).find_map(|c| {
            let diff = h.edge(b).symmetric_difference(h.edge(c));
            index
                .coverable(&diff, t, None, &[b, c])
                .then(|| (b, c, index.lex_min_cover(&diff, t, &[b, c]).unwrap()))
        })
    });
    match found {
        None => PropertyVerdict::holds(),
        Some((b, c, others)) => PropertyVerdict::violated(Certificate::Cancellative {
            others: others.into_iter().map(|i| h.edge(i).clone()).collect(),
            b: h.edge(b).clone(),
            c: h.edge(c).clone(),
        }),
    }
}

/// Holds iff no `t + 1` distinct edges `A_1..A_t, B` satisfy `B ⊆ ∪A_i`.
pub fn check_cover_free(h: &Hypergraph, t: usize) -> PropertyVerdict {
    let m = h.len();
    if t == 0 || m < t + 1 {
        return PropertyVerdict::holds();
    }
    let index = CoverIndex::new(h.n(), h.r(), h.edges());
    let found = (0..m).into_par_iter().find_map_first(|b| {
        index
            .coverable(h.edge(b), t, None, &[b])
            .then(|| (b, index.lex_min_cover(h.edge(b), t, &[b]).unwrap()))
    });
    match found {
        None => PropertyVerdict::holds(),
        Some((b, others)) => PropertyVerdict::violated(Certificate::CoverFree {
            others: others.into_iter().map(|i| h.edge(i).clone()).collect(),
            b: h.edge(b).clone(),
        }),
    }
}

/// Holds iff no two distinct subfamilies of `1..=t` edges have equal unions.
/// Uses [`DEFAULT_UNION_FREE_BUDGET`].
pub fn check_union_free(h: &Hypergraph, t: usize) -> Result<PropertyVerdict> {
    check_union_free_with_budget(h, t, DEFAULT_UNION_FREE_BUDGET)
}

/// Union-free check refusing instances needing more than `budget`
/// subfamily evaluations. Subfamily sizes are capped at `min(t, |H|)`.
pub fn check_union_free_with_budget(
    h: &Hypergraph,
    t: usize,
    budget: u128,
) -> Result<PropertyVerdict> {
    let m = h.len();
    let kmax = t.min(m);
    let required = partial_binomial_sum(m as u64, kmax as u64);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(match first_union_collision(h.n(), h.edges(), kmax) {
        None => PropertyVerdict::holds(),
        Some((left, right)) => {
            let sets = |idx: Vec<usize>| idx.into_iter().map(|i| h.edge(i).clone()).collect();
            PropertyVerdict::violated(Certificate::UnionFree {
                left: sets(left),
                right: sets(right),
            })
        }
    })
}

pub(crate) fn first_union_collision(
    n: usize,
    edges: &[VertexSet],
    kmax: usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut seen: HashMap<VertexSet, Vec<usize>> = HashMap::new();
    for size in 1..=kmax {
        let mut tuple = Vec::with_capacity(size);
        let mut unions = vec![VertexSet::empty(n); size + 1];
        if let ControlFlow::Break(hit) =
            union_combos(edges, size, 0, &mut tuple, &mut unions, &mut seen)
        {
            return Some(hit);
        }
    }
    None
}

type Collision = (Vec<usize>, Vec<usize>);

fn union_combos(
    edges: &[VertexSet],
    size: usize,
    start: usize,
    tuple: &mut Vec<usize>,
    unions: &mut [VertexSet],
    seen: &mut HashMap<VertexSet, Vec<usize>>,
) -> ControlFlow<Collision> {
    let depth = tuple.len();
    if depth == size {
        let u = &unions[depth];
        if let Some(prev) = seen.get(u) {
            return ControlFlow::Break((prev.clone(), tuple.clone()));
        }
        seen.insert(u.clone(), tuple.clone());
        return ControlFlow::Continue(());
    }
    let need = size - depth;
    for j in start..=edges.len() - need {
        let (head, tail) = unions.split_at_mut(depth + 1);
        tail[0].copy_from(&head[depth]);
        tail[0].union_with(&edges[j]);
        tuple.push(j);
        let flow = union_combos(edges, size, j + 1, tuple, unions, seen);
        tuple.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Re-evaluates the defining condition of `cert` against `h`.
///
/// Returns `Ok(false)` when the certificate is well-formed but does not
/// exhibit a violation (including repeated edges), and an error when it
/// names an edge that is not in `h`.
pub fn replay_certificate(h: &Hypergraph, cert: &Certificate) -> Result<bool> {
    let lookup = |e: &VertexSet| -> Result<usize> {
        h.index_of(e).ok_or_else(|| Error::UnknownEdge(e.to_vertices()))
    };
    let all_distinct = |idx: &mut Vec<usize>| {
        let len = idx.len();
        idx.sort_unstable();
        idx.dedup();
        idx.len() == len
    };
    let union = |edges: &[VertexSet]| {
        let mut u = VertexSet::empty(h.n());
        for e in edges {
            u.union_with(e);
        }
        u
    };

    match cert {
        Certificate::Sparse { constraint, edges } => {
            let mut idx = edges.iter().map(lookup).collect::<Result<Vec<_>>>()?;
            Ok(all_distinct(&mut idx)
                && edges.len() == constraint.e
                && union(edges).len() <= constraint.v)
        }
        Certificate::Cancellative { others, b, c } => {
            let mut idx = others.iter().map(lookup).collect::<Result<Vec<_>>>()?;
            idx.push(lookup(b)?);
            idx.push(lookup(c)?);
            if !all_distinct(&mut idx) || others.is_empty() {
                return Ok(false);
            }
            let a = union(others);
            Ok(a.union(b) == a.union(c))
        }
        Certificate::UnionFree { left, right } => {
            let mut li = left.iter().map(lookup).collect::<Result<Vec<_>>>()?;
            let mut ri = right.iter().map(lookup).collect::<Result<Vec<_>>>()?;
            if left.is_empty() || right.is_empty() || !all_distinct(&mut li) || !all_distinct(&mut ri) {
                return Ok(false);
            }
            Ok(li != ri && union(left) == union(right))
        }
        Certificate::CoverFree { others, b } => {
            let mut idx = others.iter().map(lookup).collect::<Result<Vec<_>>>()?;
            idx.push(lookup(b)?);
            if !all_distinct(&mut idx) || others.is_empty() {
                return Ok(false);
            }
            Ok(b.is_subset(&union(others)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, r: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, r, edges.iter().copied()).unwrap()
    }

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, v.iter().map(|x| x - 1))
    }

    fn triangle() -> Hypergraph {
        hg(3, 2, &[&[1, 2], &[1, 3], &[2, 3]])
    }

    #[test]
    fn sparse_examples() {
        let c52 = SparsityConstraint { v: 5, e: 2 };
        assert!(check_sparse(&hg(6, 3, &[&[1, 2, 3], &[4, 5, 6]]), c52).holds);

        let h = hg(4, 3, &[&[1, 2, 3], &[1, 2, 4]]);
        let v = check_sparse(&h, SparsityConstraint { v: 4, e: 2 });
        assert!(!v.holds);
        let cert = v.certificate.unwrap();
        assert_eq!(
            cert,
            Certificate::Sparse {
                constraint: SparsityConstraint { v: 4, e: 2 },
                edges: vec![set(4, &[1, 2, 3]), set(4, &[1, 2, 4])],
            }
        );
        assert!(replay_certificate(&h, &cert).unwrap());

        assert!(check_sparse(&hg(4, 3, &[&[1, 2, 3]]), SparsityConstraint { v: 4, e: 2 }).holds);
    }

    #[test]
    fn cancellative_triangle() {
        let h = triangle();
        let v = check_cancellative(&h, 1);
        assert!(!v.holds);
        let cert = v.certificate.unwrap();
        // minimal (B, C) = ({1,2}, {1,3}); B △ C = {2,3} is covered by {2,3}
        assert_eq!(
            cert,
            Certificate::Cancellative {
                others: vec![set(3, &[2, 3])],
                b: set(3, &[1, 2]),
                c: set(3, &[1, 3]),
            }
        );
        assert!(replay_certificate(&h, &cert).unwrap());
    }

    #[test]
    fn cancellative_matching_and_vacuous() {
        let matching = hg(12, 3, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9], &[10, 11, 12]]);
        for t in 1..=4 {
            assert!(check_cancellative(&matching, t).holds);
        }
        assert!(check_cancellative(&triangle(), 2).holds);
    }

    #[test]
    fn union_free_examples() {
        let h = hg(4, 2, &[&[1, 2], &[3, 4], &[1, 3], &[2, 4]]);
        let v = check_union_free(&h, 2).unwrap();
        assert!(!v.holds);
        let cert = v.certificate.unwrap();
        assert!(replay_certificate(&h, &cert).unwrap());
        // canonical order is 12, 13, 24, 34; first collision is {12,34} vs {13,24}
        assert_eq!(
            cert,
            Certificate::UnionFree {
                left: vec![set(4, &[1, 2]), set(4, &[3, 4])],
                right: vec![set(4, &[1, 3]), set(4, &[2, 4])],
            }
        );
        assert!(check_union_free(&h, 1).unwrap().holds);
        assert!(check_union_free(&hg(4, 2, &[&[1, 2]]), 5).unwrap().holds);
    }

    #[test]
    fn union_free_budget() {
        let h = hg(4, 2, &[&[1, 2], &[3, 4], &[1, 3], &[2, 4]]);
        let err = check_union_free_with_budget(&h, 2, 5).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { required: 10, budget: 5 }));
    }

    #[test]
    fn cover_free_examples() {
        assert!(check_cover_free(&triangle(), 1).holds);
        let h = hg(4, 2, &[&[1, 2], &[3, 4], &[1, 3]]);
        let v = check_cover_free(&h, 2);
        assert!(!v.holds);
        let cert = v.certificate.unwrap();
        assert_eq!(
            cert,
            Certificate::CoverFree {
                others: vec![set(4, &[1, 2]), set(4, &[3, 4])],
                b: set(4, &[1, 3]),
            }
        );
        assert!(replay_certificate(&h, &cert).unwrap());
        assert!(check_cover_free(&hg(4, 2, &[&[1, 2], &[3, 4]]), 2).holds);
    }

    #[test]
    fn cover_free_pads_with_lowest_edges() {
        // {4,5} is covered by {3,4},{5,6} alone; the third slot takes {1,2}
        let h = hg(6, 2, &[&[1, 2], &[3, 4], &[4, 5], &[5, 6]]);
        let cert = check_cover_free(&h, 3).certificate.unwrap();
        assert_eq!(
            cert,
            Certificate::CoverFree {
                others: vec![set(6, &[1, 2]), set(6, &[3, 4]), set(6, &[5, 6])],
                b: set(6, &[4, 5]),
            }
        );
    }

    #[test]
    fn replay_rejects_bogus_certificates() {
        let h = triangle();
        let same = Certificate::Cancellative {
            others: vec![set(3, &[2, 3])],
            b: set(3, &[1, 2]),
            c: set(3, &[1, 2]),
        };
        assert!(!replay_certificate(&h, &same).unwrap());

        let h6 = hg(6, 3, &[&[1, 2, 3], &[4, 5, 6]]);
        let not_violating = Certificate::Sparse {
            constraint: SparsityConstraint { v: 5, e: 2 },
            edges: vec![set(6, &[1, 2, 3]), set(6, &[4, 5, 6])],
        };
        assert!(!replay_certificate(&h6, &not_violating).unwrap());

        let unknown = Certificate::CoverFree {
            others: vec![set(3, &[1, 2])],
            b: set(3, &[1, 2]),
        };
        assert!(replay_certificate(&hg(3, 2, &[&[1, 3]]), &unknown).is_err());
    }

    #[test]
    fn property_parsing() {
        assert_eq!(
            Property::parse("union-free", Some(3), None, None).unwrap(),
            Property::UnionFree { t: 3 }
        );
        assert!(Property::parse("sparse", None, Some(4), None).is_err());
        assert!(Property::parse("bogus", Some(1), None, None).is_err());
        assert!(check(&triangle(), &Property::Cancellative { t: 0 }).is_err());
    }
}
