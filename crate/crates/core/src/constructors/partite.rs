//! Extraction of an r-partite subhypergraph.
//!
//! The deterministic mode assigns vertices `1..n` one at a time, each to the
//! part maximizing the conditional expectation of the number of crossing
//! edges when the remaining vertices are placed uniformly at random. The
//! expectation starts at `m·r!/r^r` and never decreases, so the final count
//! of crossing edges is at least `⌈m·r!/r^r⌉`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::hypergraph::{Hypergraph, Partition};

/// Scaled conditional probability that an edge ends up crossing.
trait Weight: Copy + PartialOrd + std::ops::Add<Output = Self> {
    fn zero() -> Self;
    /// Table indexed by the number of already-assigned vertices `a`,
    /// proportional to `(r − a)!/r^{r − a}`.
    fn table(r: usize) -> Vec<Self>;
}

impl Weight for u128 {
    fn zero() -> Self {
        0
    }

    // (r − a)! · r^a, i.e. the probability times r^r
    fn table(r: usize) -> Vec<Self> {
        (0..=r)
            .map(|a| {
                let fact: u128 = (1..=(r - a) as u128).product();
                fact * (r as u128).pow(a as u32)
            })
            .collect()
    }
}

impl Weight for f64 {
    fn zero() -> Self {
        0.0
    }

    fn table(r: usize) -> Vec<Self> {
        (0..=r)
            .map(|a| {
                let k = r - a;
                (1..=k).map(|i| i as f64 / r as f64).product()
            })
            .collect()
    }
}

// r^r and r! both fit in u128 up to here
const EXACT_WEIGHT_MAX_R: usize = 24;

/// Deterministic r-partite extraction by conditional expectations.
pub fn partite_extract(h: &Hypergraph) -> (Partition, Hypergraph) {
    let assign = if h.r() <= EXACT_WEIGHT_MAX_R {
        assign_parts::<u128>(h)
    } else {
        assign_parts::<f64>(h)
    };
    let partition = Partition::from_assignment(h.n(), h.r(), &assign);
    let crossing = partite_extract_with(h, &partition);
    (partition, crossing)
}

/// Edges of `h` crossing a given partition.
pub fn partite_extract_with(h: &Hypergraph, partition: &Partition) -> Hypergraph {
    h.filter(|e| partition.is_crossing(e))
}

/// Extraction with a uniformly random vertex-to-part assignment.
pub fn random_partite_extract(h: &Hypergraph, seed: u64) -> (Partition, Hypergraph) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let assign: Vec<usize> = (0..h.n()).map(|_| rng.random_range(0..h.r())).collect();
    let partition = Partition::from_assignment(h.n(), h.r(), &assign);
    let crossing = partite_extract_with(h, &partition);
    (partition, crossing)
}

struct EdgeState {
    used: VertexSet,
    assigned: usize,
    dead: bool,
}

fn assign_parts<W: Weight>(h: &Hypergraph) -> Vec<usize> {
    let r = h.r();
    let weights = W::table(r);
    let incidence = h.incidence();
    let mut state: Vec<EdgeState> = (0..h.len())
        .map(|_| EdgeState {
            used: VertexSet::empty(r),
            assigned: 0,
            dead: false,
        })
        .collect();
    let mut assign = vec![0; h.n()];

    for v in 0..h.n() {
        let mut best_part = 0;
        let mut best_score = W::zero();
        for p in 0..r {
            let mut score = W::zero();
            for &e in &incidence[v] {
                let s = &state[e as usize];
                if !s.dead && !s.used.contains(p) {
                    score = score + weights[s.assigned + 1];
                }
            }
            if p == 0 || score > best_score {
                best_part = p;
                best_score = score;
            }
        }
        assign[v] = best_part;
        for &e in &incidence[v] {
            let s = &mut state[e as usize];
            if s.used.contains(best_part) {
                s.dead = true;
            } else {
                s.used.insert(best_part);
                s.assigned += 1;
            }
        }
    }
    assign
}

/// `⌈m · r!/r^r⌉`, the guaranteed number of crossing edges.
pub fn crossing_lower_bound(m: usize, r: usize) -> usize {
    if r <= EXACT_WEIGHT_MAX_R {
        let fact: u128 = (1..=r as u128).product();
        let pow = (r as u128).pow(r as u32);
        (m as u128 * fact).div_ceil(pow) as usize
    } else {
        let frac: f64 = (1..=r).map(|i| i as f64 / r as f64).product();
        (m as f64 * frac).ceil() as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Combinations;

    /// Best crossing count over all assignments of `0..n` to `r` parts.
    fn brute_force_best(h: &Hypergraph) -> usize {
        let (n, r) = (h.n(), h.r());
        let total = r.pow(n as u32);
        (0..total)
            .map(|mut code| {
                let assign: Vec<usize> = (0..n)
                    .map(|_| {
                        let p = code % r;
                        code /= r;
                        p
                    })
                    .collect();
                let part = Partition::from_assignment(n, r, &assign);
                h.edges().iter().filter(|e| part.is_crossing(e)).count()
            })
            .max()
            .unwrap()
    }

    #[test]
    fn triangle_keeps_two_edges() {
        let h = Hypergraph::new(3, 2, [[1, 2], [1, 3], [2, 3]]).unwrap();
        assert_eq!(brute_force_best(&h), 2);
        let (part, sub) = partite_extract(&h);
        assert_eq!(sub.len(), 2);
        assert!(sub.edges().iter().all(|e| part.is_crossing(e)));
        assert_eq!(crossing_lower_bound(3, 2), 2);
    }

    #[test]
    fn hint_partition_keeps_partite_graph() {
        let h = Hypergraph::new(4, 2, [[1, 3], [1, 4], [2, 3], [2, 4]]).unwrap();
        let part = Partition::from_lists(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(partite_extract_with(&h, &part), h);
    }

    #[test]
    fn single_edge_survives() {
        let h = Hypergraph::new(3, 3, [[1, 2, 3]]).unwrap();
        assert_eq!(crossing_lower_bound(1, 3), 1);
        let (_, sub) = partite_extract(&h);
        assert_eq!(sub.len(), 1);
    }

    #[test]
    fn complete_graphs_meet_bound() {
        for (n, r) in [(5, 2), (6, 3), (7, 3), (6, 4)] {
            let edges: Vec<Vec<usize>> = Combinations::new(n, r)
                .map(|c| c.into_iter().map(|v| v + 1).collect())
                .collect();
            let h = Hypergraph::new(n, r, edges).unwrap();
            let (part, sub) = partite_extract(&h);
            assert!(sub.len() >= crossing_lower_bound(h.len(), r));
            assert!(sub.edges().iter().all(|e| part.is_crossing(e)));
        }
    }

    #[test]
    fn float_and_exact_weights_agree() {
        let h = Hypergraph::new(7, 3, [[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 7], [1, 6, 7]]).unwrap();
        assert_eq!(assign_parts::<u128>(&h), assign_parts::<f64>(&h));
    }

    #[test]
    fn random_mode_is_seeded() {
        let h = Hypergraph::new(6, 3, [[1, 2, 3], [4, 5, 6], [1, 4, 5]]).unwrap();
        assert_eq!(random_partite_extract(&h, 3), random_partite_extract(&h, 3));
    }
}
