//! Exact maximum family sizes for small `(n, r)` by branch and bound, with an
//! exhaustive powerset oracle for the tiniest cases.
//!
//! Candidate edges are all r-subsets of `1..n` in lexicographic order and the
//! search only ever adds edges in increasing order. Every property here is
//! closed under edge deletion, so a candidate that cannot join the current
//! family can be dropped for the whole subtree. The first maximum family
//! found in this order is the lexicographically smallest one.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::checkers::{check, first_union_collision, Property};
use crate::combinatorics::{binomial, Combinations};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Largest candidate-edge count accepted by [`exact_max`].
pub const EXACT_GUARD: u128 = 1_000_000;
/// Largest candidate-edge count accepted by [`naive_max`].
pub const NAIVE_GUARD: u128 = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SymmetryMode {
    None,
    /// The first chosen edge is `{1..r}`.
    #[default]
    FixFirstEdge,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchProblem {
    pub n: usize,
    pub r: usize,
    pub property: Property,
    pub time_budget: Option<Duration>,
    pub symmetry: SymmetryMode,
}

impl SearchProblem {
    pub fn new(n: usize, r: usize, property: Property) -> Self {
        Self {
            n,
            r,
            property,
            time_budget: None,
            symmetry: SymmetryMode::default(),
        }
    }

    fn candidates(&self, guard: u128) -> Result<Vec<VertexSet>> {
        Hypergraph::empty(self.n, self.r)?;
        self.property.validate(self.r)?;
        let count = binomial(self.n as u64, self.r as u64).unwrap_or(u128::MAX);
        if count > guard {
            return Err(Error::InvalidParameter(format!(
                "C({}, {}) = {count} candidate edges exceeds the guard of {guard}",
                self.n, self.r
            )));
        }
        Ok(Combinations::new(self.n, self.r)
            .map(|c| VertexSet::from_indices(self.n, c))
            .collect())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub max_size: usize,
    pub witness: Hypergraph,
    /// False when the time budget ran out; `max_size` is then a lower bound.
    pub optimal: bool,
    pub nodes_explored: u64,
}

/// Branch-and-bound maximum.
pub fn exact_max(p: &SearchProblem) -> Result<SearchResult> {
    let cands = p.candidates(EXACT_GUARD)?;
    let mut search = Search {
        n: p.n,
        property: p.property,
        cands: &cands,
        best: Vec::new(),
        nodes: 0,
        deadline: p.time_budget.map(|b| Instant::now() + b),
        timed_out: false,
    };
    let all: Vec<usize> = (0..cands.len()).collect();
    let roots = match p.symmetry {
        SymmetryMode::None => all.len(),
        SymmetryMode::FixFirstEdge => all.len().min(1),
    };
    let mut chosen = Vec::new();
    let mut family = Vec::new();
    search.nodes += 1;
    for pos in 0..roots {
        if search.timed_out || all.len() - pos <= search.best.len() {
            break;
        }
        search.descend(&mut chosen, &mut family, &all, pos);
    }
    let witness = Hypergraph::from_sorted_unchecked(
        p.n,
        p.r,
        search.best.iter().map(|&i| cands[i].clone()).collect(),
    );
    Ok(SearchResult {
        max_size: witness.len(),
        witness,
        optimal: !search.timed_out,
        nodes_explored: search.nodes,
    })
}

struct Search<'a> {
    n: usize,
    property: Property,
    cands: &'a [VertexSet],
    best: Vec<usize>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl Search<'_> {
    /// Adds `open[pos]` to the family and explores below it.
    fn descend(
        &mut self,
        chosen: &mut Vec<usize>,
        family: &mut Vec<VertexSet>,
        open: &[usize],
        pos: usize,
    ) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return;
        }
        let c = open[pos];
        chosen.push(c);
        family.push(self.cands[c].clone());
        if chosen.len() > self.best.len() {
            self.best = chosen.clone();
        }
        let next: Vec<usize> = open[pos + 1..]
            .iter()
            .copied()
            .filter(|&d| admits(self.n, self.property, family, &self.cands[d]))
            .collect();
        for i in 0..next.len() {
            if chosen.len() + (next.len() - i) <= self.best.len() || self.timed_out {
                break;
            }
            self.descend(chosen, family, &next, i);
        }
        chosen.pop();
        family.pop();
    }
}

/// Can `pool` minus `skip` cover `target` with at most `slots` edges?
fn coverable(target: &VertexSet, pool: &[VertexSet], slots: usize, skip: &[usize]) -> bool {
    let Some(u) = target.first() else {
        return true;
    };
    if slots == 0 {
        return false;
    }
    pool.iter().enumerate().any(|(j, e)| {
        !skip.contains(&j) && e.contains(u) && coverable(&target.difference(e), pool, slots - 1, skip)
    })
}

/// Does `family ∪ {cand}` keep the property, given that `family` has it?
/// Only configurations that involve `cand` need checking.
pub(crate) fn admits(n: usize, property: Property, family: &[VertexSet], cand: &VertexSet) -> bool {
    let m = family.len() + 1;
    match property {
        Property::Sparse(c) => {
            fn tight(
                family: &[VertexSet],
                start: usize,
                left: usize,
                union: &VertexSet,
                bound: usize,
            ) -> bool {
                if left == 0 {
                    return true;
                }
                (start..family.len()).any(|j| {
                    union.union_len(&family[j]) <= bound
                        && tight(family, j + 1, left - 1, &union.union(&family[j]), bound)
                })
            }
            cand.len() > c.v || m < c.e || !tight(family, 0, c.e - 1, cand, c.v)
        }
        Property::CoverFree { t } => {
            if m < t + 1 {
                return true;
            }
            if m == t + 1 {
                // the only (t+1)-tuple is everything
                let mut all = family.to_vec();
                all.push(cand.clone());
                return (0..all.len()).all(|b| !coverable(&all[b], &all, t, &[b]));
            }
            !coverable(cand, family, t, &[])
                && (0..family.len()).all(|b| {
                    t == 1 || !coverable(&family[b].difference(cand), family, t - 1, &[b])
                })
        }
        Property::Cancellative { t } => {
            if m < t + 2 {
                return true;
            }
            if m == t + 2 {
                let mut all = family.to_vec();
                all.push(cand.clone());
                return (0..all.len()).all(|b| {
                    (b + 1..all.len())
                        .all(|c| !coverable(&all[b].symmetric_difference(&all[c]), &all, t, &[b, c]))
                });
            }
            let as_bc = (0..family.len())
                .any(|c| coverable(&cand.symmetric_difference(&family[c]), family, t, &[c]));
            if as_bc {
                return false;
            }
            !(0..family.len()).any(|b| {
                (b + 1..family.len()).any(|c| {
                    let diff = family[b].symmetric_difference(&family[c]).difference(cand);
                    coverable(&diff, family, t - 1, &[b, c])
                })
            })
        }
        Property::UnionFree { t } => {
            let mut all = family.to_vec();
            all.push(cand.clone());
            first_union_collision(n, &all, t.min(m)).is_none()
        }
    }
}

/// Exhaustive powerset maximum; test oracle for [`exact_max`].
pub fn naive_max(p: &SearchProblem) -> Result<SearchResult> {
    let cands = p.candidates(NAIVE_GUARD)?;
    let total = cands.len();
    let mut nodes = 0u64;
    for size in (0..=total).rev() {
        let combos: Vec<Vec<usize>> = Combinations::new(total, size).collect();
        nodes += combos.len() as u64;
        let hit = combos.into_par_iter().find_map_first(|combo| {
            let h = Hypergraph::from_sorted_unchecked(
                p.n,
                p.r,
                combo.iter().map(|&i| cands[i].clone()).collect(),
            );
            match check(&h, &p.property) {
                Ok(v) if v.holds => Some(Ok(h)),
                Ok(_) => None,
                Err(e) => Some(Err(e)),
            }
        });
        if let Some(found) = hit {
            let witness = found?;
            return Ok(SearchResult {
                max_size: witness.len(),
                witness,
                optimal: true,
                nodes_explored: nodes,
            });
        }
    }
    unreachable!("the empty family has every property")
}

/// One row of an exact table.
#[derive(Clone, Debug, PartialEq)]
pub struct TableRow {
    pub n: usize,
    pub result: SearchResult,
    pub seconds: f64,
}

/// [`exact_max`] for each `n` in `ns`, keeping the other fields of `template`.
pub fn exact_table(template: &SearchProblem, ns: impl IntoIterator<Item = usize>) -> Result<Vec<TableRow>> {
    ns.into_iter()
        .map(|n| {
            let p = SearchProblem { n, ..template.clone() };
            let start = Instant::now();
            let result = exact_max(&p)?;
            Ok(TableRow {
                n,
                result,
                seconds: start.elapsed().as_secs_f64(),
            })
        })
        .collect()
}
