#![allow(dead_code)]

//! Brute-force oracles and instance generators shared by the integration
//! tests. Everything here works on plain `Vec<Vec<usize>>` edge lists so it
//! stays independent of the library's bitset kernels.

use std::collections::{BTreeSet, HashMap};

use hyperturan::{check_sparse, Certificate, Hypergraph, SparsityConstraint};
use proptest::prelude::*;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, RngCore};

pub type Edges = Vec<Vec<usize>>;

pub fn edge_sets(h: &Hypergraph) -> Vec<BTreeSet<usize>> {
    h.edge_lists()
        .into_iter()
        .map(|e| e.into_iter().collect())
        .collect()
}

fn union_of(sets: &[BTreeSet<usize>], idx: &[usize]) -> BTreeSet<usize> {
    idx.iter().flat_map(|&i| sets[i].iter().copied()).collect()
}

/// All k-subsets of `0..m` in lexicographic order.
pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Direct `(t+2)`-tuple search for distinct `A_1..A_t, B, C` with equal
/// unions. Returns the first hit as `(A, B, C)` edge indices, scanning
/// `B < C` then `A` in lexicographic order.
pub fn naive_cancellative_cert(h: &Hypergraph, t: usize) -> Option<(Vec<usize>, usize, usize)> {
    let s = edge_sets(h);
    let m = s.len();
    if m < t + 2 {
        return None;
    }
    for b in 0..m {
        for c in b + 1..m {
            let rest: Vec<usize> = (0..m).filter(|&i| i != b && i != c).collect();
            for a in subsets(rest.len(), t) {
                let a: Vec<usize> = a.iter().map(|&i| rest[i]).collect();
                let w = union_of(&s, &a);
                let wb: BTreeSet<usize> = w.union(&s[b]).copied().collect();
                let wc: BTreeSet<usize> = w.union(&s[c]).copied().collect();
                if wb == wc {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

pub fn naive_cancellative(h: &Hypergraph, t: usize) -> bool {
    naive_cancellative_cert(h, t).is_none()
}

/// First `(A, B)` with `B` inside the union of the `t` edges `A`.
pub fn naive_cover_free_cert(h: &Hypergraph, t: usize) -> Option<(Vec<usize>, usize)> {
    let s = edge_sets(h);
    let m = s.len();
    if m < t + 1 {
        return None;
    }
    for b in 0..m {
        let rest: Vec<usize> = (0..m).filter(|&i| i != b).collect();
        for a in subsets(rest.len(), t) {
            let a: Vec<usize> = a.iter().map(|&i| rest[i]).collect();
            if s[b].is_subset(&union_of(&s, &a)) {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn naive_cover_free(h: &Hypergraph, t: usize) -> bool {
    naive_cover_free_cert(h, t).is_none()
}

/// Pairwise comparison of all nonempty subfamilies of size at most `t`,
/// listed by size and then lexicographically. Returns the first pair
/// `(earlier, later)` with equal unions, minimizing `later`.
pub fn naive_union_free_cert(h: &Hypergraph, t: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let s = edge_sets(h);
    let m = s.len();
    let fams: Vec<(Vec<usize>, BTreeSet<usize>)> = (1..=t.min(m))
        .flat_map(|k| subsets(m, k))
        .map(|f| {
            let u = union_of(&s, &f);
            (f, u)
        })
        .collect();
    for j in 0..fams.len() {
        for i in 0..j {
            if fams[i].1 == fams[j].1 {
                return Some((fams[i].0.clone(), fams[j].0.clone()));
            }
        }
    }
    None
}

pub fn naive_union_free(h: &Hypergraph, t: usize) -> bool {
    naive_union_free_cert(h, t).is_none()
}

/// Every `e` distinct edges span more than `v` vertices.
pub fn naive_sparse(h: &Hypergraph, v: usize, e: usize) -> bool {
    let s = edge_sets(h);
    subsets(s.len(), e)
        .iter()
        .all(|f| union_of(&s, f).len() > v)
}

/// `⌈m · r!/r^r⌉`, computed with exact integers.
pub fn partite_bound(m: usize, r: usize) -> usize {
    let fact: u128 = (1..=r as u128).product();
    let pow: u128 = (r as u128).pow(r as u32);
    let num = m as u128 * fact;
    num.div_ceil(pow) as usize
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Codegrees of all k-subsets contained in some edge.
pub fn naive_codegrees(h: &Hypergraph, k: usize) -> HashMap<Vec<usize>, usize> {
    let mut out = HashMap::new();
    for e in h.edge_lists() {
        for s in subsets(e.len(), k) {
            let key: Vec<usize> = s.iter().map(|&i| e[i]).collect();
            *out.entry(key).or_insert(0) += 1;
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Up to `m` distinct random r-subsets of `1..=n`.
pub fn random_edges<R: RngCore>(rng: &mut R, n: usize, r: usize, m: usize) -> Edges {
    let verts: Vec<usize> = (1..=n).collect();
    let mut seen = BTreeSet::new();
    let target = m.min(binom(n, r));
    let mut tries = 0;
    while seen.len() < target && tries < 50 * (target + 1) {
        tries += 1;
        let mut e: Vec<usize> = verts.choose_multiple(rng, r).copied().collect();
        e.sort_unstable();
        seen.insert(e);
    }
    seen.into_iter().collect()
}

pub fn random_hypergraph<R: RngCore>(rng: &mut R, n: usize, r: usize, m: usize) -> Hypergraph {
    Hypergraph::new(n, r, random_edges(rng, n, r, m)).unwrap()
}

/// A random r-partite hypergraph with its vertex classes (1-based).
pub fn random_partite<R: RngCore>(rng: &mut R, n: usize, r: usize, m: usize) -> (Vec<Vec<usize>>, Hypergraph) {
    assert!(n >= r);
    let mut verts: Vec<usize> = (1..=n).collect();
    verts.shuffle(rng);
    let mut parts = vec![Vec::new(); r];
    for (i, &v) in verts.iter().enumerate() {
        let p = if i < r { i } else { rng.random_range(0..r) };
        parts[p].push(v);
    }
    for p in &mut parts {
        p.sort_unstable();
    }
    let mut seen = BTreeSet::new();
    for _ in 0..m * 4 {
        if seen.len() == m {
            break;
        }
        let mut e: Vec<usize> = parts.iter().map(|p| p[rng.random_range(0..p.len())]).collect();
        e.sort_unstable();
        seen.insert(e);
    }
    let h = Hypergraph::new(n, r, seen.into_iter().collect::<Edges>()).unwrap();
    (parts, h)
}

/// Deletes the last edge of each sparsity certificate until every
/// constraint holds. Deletion keeps partiteness and only ever helps.
pub fn sparsify(h: &Hypergraph, constraints: &[SparsityConstraint]) -> Hypergraph {
    let mut h = h.clone();
    'outer: loop {
        for &c in constraints {
            if let Some(Certificate::Sparse { edges, .. }) = check_sparse(&h, c).certificate {
                let last = edges.iter().max().unwrap().clone();
                h = h.filter(|e| *e != last);
                continue 'outer;
            }
        }
        return h;
    }
}

// ---------------------------------------------------------------------------
// proptest strategies
// ---------------------------------------------------------------------------

/// A hypergraph with `n` in `nmin..=nmax`, uniformity in `rs`, at most
/// `mmax` edges.
pub fn arb_hypergraph(
    rs: std::ops::RangeInclusive<usize>,
    nmax: usize,
    mmax: usize,
) -> impl Strategy<Value = Hypergraph> {
    rs.prop_flat_map(move |r| (Just(r), (r + 1).max(2)..=nmax.max(r + 1)))
        .prop_flat_map(move |(r, n)| {
            let edge = proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), r);
            (Just(n), Just(r), proptest::collection::vec(edge, 0..=mmax))
        })
        .prop_map(|(n, r, mut edges)| {
            edges.sort();
            edges.dedup();
            Hypergraph::new(n, r, edges).unwrap()
        })
}

/// An r-partite hypergraph with its classes.
pub fn arb_partite(
    rs: std::ops::RangeInclusive<usize>,
    nmax: usize,
    mmax: usize,
) -> impl Strategy<Value = (Vec<Vec<usize>>, Hypergraph)> {
    (rs, any::<u64>()).prop_flat_map(move |(r, seed)| {
        (r..=nmax.max(r), 0..=mmax).prop_map(move |(n, m)| {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            random_partite(&mut rng, n, r, m)
        })
    })
}
