#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use nkstar::{GraphSpec, SimpleGraph, StarGraph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn star(n: usize, k: usize) -> StarGraph {
    StarGraph::build(GraphSpec::new(n, k).unwrap()).unwrap()
}

/// Every valid `(n, k)` with `n <= n_max`, including `k = 1`.
pub fn all_specs(n_max: usize) -> Vec<(usize, usize)> {
    (2..=n_max).flat_map(|n| (1..n).map(move |k| (n, k))).collect()
}

/// All k-permutations of 1..=n in lexicographic order, by plain recursion.
pub fn permutations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in 1..=n {
            if !cur.contains(&s) {
                cur.push(s);
                go(n, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, k, &mut Vec::new(), &mut out);
    out
}

/// Adjacency straight from the swap / replace-first-symbol rules, keyed by
/// symbol sequence.
pub fn definition_adjacency(n: usize, k: usize) -> BTreeMap<Vec<usize>, BTreeSet<Vec<usize>>> {
    let mut adj = BTreeMap::new();
    for p in permutations(n, k) {
        let mut nb = BTreeSet::new();
        for i in 1..k {
            let mut q = p.clone();
            q.swap(0, i);
            nb.insert(q);
        }
        for a in (1..=n).filter(|a| !p.contains(a)) {
            let mut q = p.clone();
            q[0] = a;
            nb.insert(q);
        }
        adj.insert(p, nb);
    }
    adj
}

/// `λ_s^(h)` straight from the definition: minimum `|∂S|` over every
/// nonempty proper subset `S` whose two sides both keep minimum degree `h`.
pub fn lambda_h_all_subsets(g: &SimpleGraph, h: usize) -> Option<usize> {
    let n = g.vertex_count();
    assert!(n <= 24, "all-subsets oracle is exponential");
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | 1 << u)).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut best = None;
    // vertex n-1 always outside: each bipartition counted once
    for s in 1..(1u32 << (n - 1)) {
        let t = full & !s;
        let mut cut = 0;
        let mut ok = true;
        for v in 0..n {
            let side = if s >> v & 1 == 1 { s } else { t };
            if ((adj[v] & side).count_ones() as usize) < h {
                ok = false;
                break;
            }
            if side == s {
                cut += (adj[v] & t).count_ones() as usize;
            }
        }
        if ok && best.is_none_or(|b| cut < b) {
            best = Some(cut);
        }
    }
    best
}

/// `λ` from the definition, over all bipartitions.
pub fn edge_connectivity_all_subsets(g: &SimpleGraph) -> usize {
    lambda_h_all_subsets(g, 0).unwrap_or(0)
}

/// Connected simple d-regular graph on n vertices by the pairing model with
/// rejection.
pub fn random_regular(n: usize, d: usize, seed: u64) -> SimpleGraph {
    assert!((n * d).is_multiple_of(2) && d < n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
        points.shuffle(&mut rng);
        let edges: Vec<(usize, usize)> = points.chunks(2).map(|p| (p[0], p[1])).collect();
        if let Ok(g) = SimpleGraph::from_edges(n, &edges) {
            if g.is_connected() {
                return g;
            }
        }
    }
}
