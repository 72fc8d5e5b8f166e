//! Exhaustive reference for the h-super edge-connectivity of small graphs.
//!
//! Every connected vertex set with at most half the vertices is enumerated
//! (ESU-style extension with exclusive neighbourhoods) and scored from
//! scratch. Nothing is pruned, so this is the yardstick for the pruned search.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Largest graph the exhaustive enumeration accepts.
pub const BRUTEFORCE_MAX_VERTICES: usize = 30;

/// `λ_s^(h)(g)` by full enumeration; `None` when no h-edge-cut exists.
pub fn lambda_h_bruteforce(g: &SimpleGraph, h: usize) -> Result<Option<usize>> {
    let all = lambda_all_h_bruteforce(g)?;
    Ok(all.get(h).copied().flatten())
}

/// `λ_s^(h)(g)` for every `h` in `0..=max_degree`, from a single enumeration.
pub fn lambda_all_h_bruteforce(g: &SimpleGraph) -> Result<Vec<Option<usize>>> {
    let n = g.vertex_count();
    if n > BRUTEFORCE_MAX_VERTICES {
        return Err(Error::Size(format!(
            "exhaustive enumeration is capped at {BRUTEFORCE_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let adj: Vec<u64> =
        (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | (1 << u))).collect();
    let mut e = Enumerator {
        adj: &adj,
        n,
        full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        cap: n / 2,
        best: vec![None; g.max_degree() + 1],
    };
    for root in 0..n {
        let ext: Vec<usize> = g.neighbors(root).iter().copied().filter(|&u| u > root).collect();
        e.extend(1 << root, 1, ext, root);
    }
    Ok(e.best)
}

struct Enumerator<'a> {
    adj: &'a [u64],
    n: usize,
    full: u64,
    cap: usize,
    best: Vec<Option<usize>>,
}

impl Enumerator<'_> {
    fn extend(&mut self, sub: u64, size: usize, mut ext: Vec<usize>, root: usize) {
        self.score(sub);
        if size == self.cap {
            return;
        }
        let closed = self.closed_neighbourhood(sub);
        while let Some(w) = ext.pop() {
            let mut next = ext.clone();
            let mut fresh = self.adj[w] & !closed;
            while fresh != 0 {
                let u = fresh.trailing_zeros() as usize;
                fresh &= fresh - 1;
                if u > root {
                    next.push(u);
                }
            }
            self.extend(sub | (1 << w), size + 1, next, root);
        }
    }

    fn closed_neighbourhood(&self, sub: u64) -> u64 {
        let mut out = sub;
        let mut rest = sub;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.adj[v];
        }
        out
    }

    fn score(&mut self, sub: u64) {
        let outside = self.full & !sub;
        let mut cut = 0usize;
        let mut min_in = usize::MAX;
        let mut min_out = usize::MAX;
        for v in 0..self.n {
            if sub >> v & 1 == 1 {
                cut += (self.adj[v] & outside).count_ones() as usize;
                min_in = min_in.min((self.adj[v] & sub).count_ones() as usize);
            } else {
                min_out = min_out.min((self.adj[v] & outside).count_ones() as usize);
            }
        }
        let reach = min_in.min(min_out).min(self.best.len() - 1);
        for slot in &mut self.best[..=reach] {
            if slot.is_none_or(|b| cut < b) {
                *slot = Some(cut);
            }
        }
    }
}
