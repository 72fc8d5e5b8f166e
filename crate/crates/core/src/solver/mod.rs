//! Exact edge connectivity and h-super edge-connectivity.
//!
//! [`edge_connectivity`] is max-flow based. [`lambda_h_exact`] runs the
//! branch-and-bound in [`search`] over connected vertex sets; it relies on the
//! fact that a minimum h-edge-cut can always be realised as the boundary of a
//! connected set `X` with `|X| <= |V|/2` whose two sides both keep minimum
//! degree `h` (take a component of the smaller side of any optimal cut).
//! [`lambda_h_bruteforce`] is the unpruned reference used in tests.

mod brute;
mod flow;
mod search;

use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use crate::cut::{construct_cut, CliqueCutMode, CutWitness};
use crate::decomposition::default_alpha;
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, StarGraph};

pub use brute::{lambda_all_h_bruteforce, lambda_h_bruteforce, BRUTEFORCE_MAX_VERTICES};
pub use flow::edge_connectivity;

/// Limits for one exact search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub time_limit: Duration,
    pub node_limit: u64,
    /// Largest side to consider. A cap below `|V|/2` makes the answer an
    /// upper bound only.
    pub size_cap: Option<usize>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { time_limit: Duration::from_secs(30 * 60), node_limit: u64::MAX, size_cap: None }
    }
}

impl SearchBudget {
    pub fn with_time_limit(time_limit: Duration) -> Self {
        Self { time_limit, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.time_limit.is_zero() || self.node_limit == 0 || self.size_cap == Some(0) {
            return Err(Error::Parameter(format!("search budget limits must be positive: {self:?}")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverResult {
    /// Minimum h-edge-cut size found; `None` if no h-edge-cut was found.
    pub value: Option<usize>,
    pub witness: Option<CutWitness>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    /// The search ran to completion, so `value` is the true minimum (or
    /// `None` proves that no h-edge-cut exists).
    pub exact: bool,
    pub budget: SearchBudget,
}

impl SolverResult {
    pub fn to_json(&self, name: impl Fn(usize) -> String) -> Value {
        json!({
            "value": self.value,
            "exact": self.exact,
            "nodesExplored": self.nodes_explored,
            "elapsedMs": self.elapsed.as_millis() as u64,
            "witness": self.witness.as_ref().map(|w| w.to_json(name)),
        })
    }
}

/// Options beyond the budget.
#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    /// Worker threads; 0 and 1 both mean single-threaded.
    pub threads: usize,
    /// A known valid h-edge-cut used as the initial incumbent.
    pub seed: Option<CutWitness>,
}

/// `λ_s^(h)` of `S(n,k)`, seeded with the clique constructions.
pub fn lambda_h_exact(g: &StarGraph, h: usize, budget: &SearchBudget, threads: usize) -> Result<SolverResult> {
    let seed = clique_seed(g, h)?;
    lambda_h_exact_on(g.topology(), h, budget, &SolveOptions { threads, seed })
}

/// Smallest valid clique-based cut for this `h`, if any.
pub fn clique_seed(g: &StarGraph, h: usize) -> Result<Option<CutWitness>> {
    if g.k() < 2 {
        return Ok(None);
    }
    let alpha = default_alpha(g)?;
    let mut seed: Option<CutWitness> = None;
    for mode in [CliqueCutMode::SubClique, CliqueCutMode::FullClique] {
        let Ok(c) = construct_cut(g, h, &alpha, mode) else { continue };
        if c.witness.valid && seed.as_ref().is_none_or(|s| c.witness.value() < s.value()) {
            seed = Some(c.witness);
        }
    }
    Ok(seed)
}

/// `λ_s^(h)` of an arbitrary simple graph.
pub fn lambda_h_exact_on(
    g: &SimpleGraph,
    h: usize,
    budget: &SearchBudget,
    opts: &SolveOptions,
) -> Result<SolverResult> {
    budget.validate()?;
    let started = Instant::now();
    let n = g.vertex_count();
    let finish = |value: Option<(usize, Vec<usize>)>, nodes: u64, exact: bool| -> Result<SolverResult> {
        let witness = value.as_ref().map(|(_, x)| CutWitness::from_side(g, x, h)).transpose()?;
        if let (Some(w), Some((v, _))) = (&witness, &value) {
            debug_assert!(w.valid && w.value() == *v, "search returned an invalid witness");
        }
        Ok(SolverResult {
            value: value.map(|v| v.0),
            witness,
            nodes_explored: nodes,
            elapsed: started.elapsed(),
            exact,
            budget: *budget,
        })
    };

    let seed = match &opts.seed {
        Some(w) => {
            let w = CutWitness::from_side(g, &w.x, h)?;
            if !w.valid {
                return Err(Error::Parameter("seed witness is not a valid h-edge-cut".into()));
            }
            Some((w.value(), w.x))
        }
        None => None,
    };
    // a vertex of degree < h lies on one side or the other and breaks it
    if n < 2 || g.min_degree() < h {
        return finish(None, 0, true);
    }
    let half = n / 2;
    let size_cap = budget.size_cap.map_or(half, |c| c.min(half));
    let cfg = search::SearchConfig {
        h,
        deadline: started + budget.time_limit,
        node_limit: budget.node_limit,
        size_cap,
        threads: opts.threads,
        seed,
    };
    let outcome = search::search(g, &cfg);
    finish(outcome.best, outcome.nodes, outcome.completed && size_cap == half)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphSpec;

    fn star(n: usize, k: usize) -> StarGraph {
        StarGraph::build(GraphSpec::new(n, k).unwrap()).unwrap()
    }

    fn solve(n: usize, k: usize, h: usize) -> SolverResult {
        lambda_h_exact(&star(n, k), h, &SearchBudget::default(), 1).unwrap()
    }

    #[test]
    fn edge_connectivity_examples() {
        assert_eq!(edge_connectivity(star(5, 3).topology()), 4);
        assert_eq!(edge_connectivity(star(4, 1).topology()), 3);
        assert_eq!(edge_connectivity(star(3, 2).topology()), 2);
    }

    #[test]
    fn exact_examples() {
        for (n, k, h, want) in [(4, 2, 1, 3), (4, 3, 1, 4), (5, 3, 1, 6), (4, 2, 0, 3)] {
            let r = solve(n, k, h);
            assert!(r.exact);
            assert_eq!(r.value, Some(want), "S({n},{k}) h={h}");
            let w = r.witness.unwrap();
            assert!(w.valid);
            assert_eq!(w.value(), want);
        }
        assert_eq!(solve(4, 2, 0).witness.unwrap().x, vec![0]);
    }

    #[test]
    fn no_cut_when_degree_too_small() {
        let g = star(4, 1);
        let r = lambda_h_exact(&g, 3, &SearchBudget::default(), 1).unwrap();
        assert!(r.exact);
        assert_eq!(r.value, None);
        assert!(r.witness.is_none());
        let r = lambda_h_exact(&g, 2, &SearchBudget::default(), 1).unwrap();
        assert_eq!((r.value, r.exact), (None, true));
    }

    #[test]
    fn size_cap_makes_result_inexact() {
        let budget = SearchBudget { size_cap: Some(1), ..SearchBudget::default() };
        let r = lambda_h_exact(&star(4, 2), 0, &budget, 1).unwrap();
        assert_eq!(r.value, Some(3));
        assert!(!r.exact);
    }

    #[test]
    fn node_limit_reports_upper_bound() {
        let budget = SearchBudget { node_limit: 1, ..SearchBudget::default() };
        let r = lambda_h_exact(&star(5, 3), 1, &budget, 1).unwrap();
        assert!(!r.exact);
        assert_eq!(r.value, Some(6));
    }

    #[test]
    fn budget_must_be_positive() {
        let budget = SearchBudget { node_limit: 0, ..SearchBudget::default() };
        assert!(lambda_h_exact(&star(4, 2), 0, &budget, 1).is_err());
    }

    #[test]
    fn invalid_seed_rejected() {
        let g = star(4, 2);
        let bad = CutWitness::from_side(g.topology(), &[0], 1).unwrap();
        let opts = SolveOptions { threads: 1, seed: Some(bad) };
        assert!(lambda_h_exact_on(g.topology(), 1, &SearchBudget::default(), &opts).is_err());
    }

    #[test]
    fn result_json_shape() {
        let g = star(4, 2);
        let r = lambda_h_exact(&g, 1, &SearchBudget::default(), 1).unwrap();
        let v = r.to_json(|i| g.name(i));
        assert_eq!(v["value"], json!(3));
        assert_eq!(v["exact"], json!(true));
        assert!(v["witness"]["X"].is_array());
        assert!(v["elapsedMs"].is_u64() && v["nodesExplored"].is_u64());
    }
}
