//! Alteration-method construction of sparse hypergraphs.
//!
//! Sample each r-set independently with probability `p = min(1, c·n^{h−r})`,
//! where `h` is the smallest constraint exponent `(e·r − v)/(e − 1)`, then
//! delete edges until no `e` edges span `v` or fewer vertices.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::ops::ControlFlow;

use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};
use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::checkers::check_sparse;
use crate::combinatorics::{binomial, unrank_combination};
use crate::error::{Error, Result};
use crate::hypergraph::{BoundedSubsets, Hypergraph, SparsityConstraint};

pub const DEFAULT_DENSITY: f64 = 0.5;

const MAX_CONFIGURATIONS: usize = 50_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct ConstructionParams {
    pub n: usize,
    pub r: usize,
    pub constraints: Vec<SparsityConstraint>,
    pub density_constant: f64,
    pub seed: u64,
}

impl ConstructionParams {
    pub fn new(
        n: usize,
        r: usize,
        constraints: Vec<SparsityConstraint>,
        density_constant: f64,
        seed: u64,
    ) -> Result<Self> {
        let p = Self {
            n,
            r,
            constraints,
            density_constant,
            seed,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        Hypergraph::empty(self.n, self.r)?;
        for c in &self.constraints {
            c.validate(self.r)?;
        }
        if !(self.density_constant.is_finite() && self.density_constant > 0.0) {
            return Err(Error::InvalidParameter(
                "density constant must be a positive number".into(),
            ));
        }
        let h = self.exponent();
        if h <= Ratio::from_integer(0) || h > Ratio::from_integer(self.r as i64) {
            return Err(Error::InvalidParameter(format!(
                "predicted exponent {h} outside (0, r]"
            )));
        }
        Ok(())
    }

    /// `min_i (e_i·r − v_i)/(e_i − 1)`; `r` when there are no constraints.
    pub fn exponent(&self) -> Ratio<i64> {
        self.constraints
            .iter()
            .map(|c| c.exponent(self.r))
            .min()
            .unwrap_or_else(|| Ratio::from_integer(self.r as i64))
    }

    /// Inclusion probability for each r-set.
    pub fn probability(&self) -> f64 {
        let h = self.exponent();
        let h = *h.numer() as f64 / *h.denom() as f64;
        (self.density_constant * (self.n as f64).powf(h - self.r as f64)).min(1.0)
    }
}

#[derive(Clone, Debug)]
pub struct AlterationOutcome {
    pub hypergraph: Hypergraph,
    pub probability: f64,
    /// Number of r-sets drawn before deletion.
    pub sampled: usize,
    /// Edges deleted while destroying each constraint's configurations,
    /// aligned with `ConstructionParams::constraints`.
    pub deletions: Vec<usize>,
    /// Bad configurations found per constraint.
    pub configurations: Vec<usize>,
}

/// Runs the alteration method; the result is verified `𝒢_r(v_i, e_i)`-free
/// for every constraint. An empty result is returned, not an error.
pub fn alteration_construct(params: &ConstructionParams) -> Result<AlterationOutcome> {
    params.validate()?;
    let (n, r) = (params.n, params.r);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let prob = params.probability();

    let total = binomial(n as u64, r as u64)
        .filter(|&t| t <= u64::MAX as u128 && t <= usize::MAX as u128)
        .ok_or_else(|| Error::InvalidParameter(format!("C({n},{r}) too large to sample")))?;
    let count = if prob >= 1.0 {
        total as u64
    } else {
        Binomial::new(total as u64, prob)
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .sample(&mut rng)
    };
    let ranks = rand::seq::index::sample(&mut rng, total as usize, count as usize);
    let edges: Vec<VertexSet> = ranks
        .iter()
        .map(|rank| VertexSet::from_indices(n, unrank_combination(n, r, rank as u128)))
        .collect();
    let sampled = edges.len();
    let mut current = Hypergraph::from_sets(n, r, edges)?;

    let mut order: Vec<usize> = (0..params.constraints.len()).collect();
    order.sort_by_key(|&i| (params.constraints[i].e, params.constraints[i].v, i));
    let mut deletions = vec![0; params.constraints.len()];
    let mut configurations = vec![0; params.constraints.len()];

    for ci in order {
        let c = params.constraints[ci];
        let configs = bad_configurations(&current, c)?;
        configurations[ci] = configs.len();
        if configs.is_empty() {
            continue;
        }
        let removed = greedy_hitting_set(current.len(), &configs);
        deletions[ci] = removed.len();
        let mut dead = vec![false; current.len()];
        for i in removed {
            dead[i] = true;
        }
        current = current.subgraph((0..current.len()).filter(|&i| !dead[i]));
    }

    for &c in &params.constraints {
        if let Some(cert) = check_sparse(&current, c).certificate {
            return Err(Error::VerificationFailed(format!(
                "alteration left a configuration: {cert}"
            )));
        }
    }

    Ok(AlterationOutcome {
        hypergraph: current,
        probability: prob,
        sampled,
        deletions,
        configurations,
    })
}

/// Every `c.e`-subset of edges spanning at most `c.v` vertices, in
/// lexicographic order of index tuples.
pub(crate) fn bad_configurations(
    h: &Hypergraph,
    c: SparsityConstraint,
) -> Result<Vec<Vec<u32>>> {
    if h.len() < c.e {
        return Ok(Vec::new());
    }
    let search = BoundedSubsets::new(h.n(), h.r(), h.edges());
    let per_root: Vec<Vec<Vec<u32>>> = (0..search.len())
        .into_par_iter()
        .map(|root| {
            let mut out = Vec::new();
            let _ = search.visit_root(root, c.e, c.v, &mut |t: &[usize]| {
                out.push(t.iter().map(|&i| i as u32).collect());
                if out.len() > MAX_CONFIGURATIONS {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            out
        })
        .collect();
    let total: usize = per_root.iter().map(Vec::len).sum();
    if total > MAX_CONFIGURATIONS {
        return Err(Error::InvalidParameter(format!(
            "more than {MAX_CONFIGURATIONS} bad configurations for {c}; lower the density constant"
        )));
    }
    Ok(per_root.into_iter().flatten().collect())
}

/// Repeatedly deletes the edge lying in the most surviving configurations,
/// lowest index first on ties, until every configuration is hit.
fn greedy_hitting_set(m: usize, configs: &[Vec<u32>]) -> Vec<usize> {
    let mut containing: Vec<Vec<u32>> = vec![Vec::new(); m];
    for (id, cfg) in configs.iter().enumerate() {
        for &e in cfg {
            containing[e as usize].push(id as u32);
        }
    }
    let mut count: Vec<usize> = containing.iter().map(Vec::len).collect();
    let mut alive = vec![true; configs.len()];
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> = count
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| (c, Reverse(i)))
        .collect();
    let mut removed = Vec::new();

    while let Some((c, Reverse(e))) = heap.pop() {
        if c == 0 {
            break;
        }
        if count[e] != c {
            // stale entry; a fresher one is in the heap
            continue;
        }
        removed.push(e);
        count[e] = 0;
        for &id in &containing[e] {
            let id = id as usize;
            if !alive[id] {
                continue;
            }
            alive[id] = false;
            for &other in &configs[id] {
                let other = other as usize;
                if other != e && count[other] > 0 {
                    count[other] -= 1;
                    if count[other] > 0 {
                        heap.push((count[other], Reverse(other)));
                    }
                }
            }
        }
    }
    removed.sort_unstable();
    removed
}
