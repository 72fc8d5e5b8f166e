//! Branch-and-bound over connected vertex sets.
//!
//! For each root `r` (in index order) the search grows sets whose smallest
//! vertex is `r` by deciding, one frontier vertex at a time, whether it joins
//! the set or is excluded for good. A set is scored when it is created.
//!
//! Pruning, all monotone along a branch:
//! - edges from the set to forbidden vertices (excluded, or below the root)
//!   stay in the boundary; prune once they exceed the incumbent;
//! - a forbidden vertex whose remaining outside degree fell below `h` can
//!   never recover;
//! - a set member short of `h` internal neighbours needs that many addable
//!   neighbours and room under the size cap.
//!
//! Ties with the incumbent are never pruned, so every optimal set is visited
//! regardless of how roots are scheduled across threads, and the reported
//! witness (the lexicographically smallest optimal set) is canonical.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use crate::graph::SimpleGraph;

/// How often a worker publishes its node count and checks the limits.
const CHECK_EVERY: u64 = 1 << 12;

pub(crate) struct SearchConfig {
    pub h: usize,
    pub deadline: Instant,
    pub node_limit: u64,
    /// Upper bound on `|X|`, already clamped to the half-size rule.
    pub size_cap: usize,
    pub threads: usize,
    /// Value and side of a known valid cut.
    pub seed: Option<(usize, Vec<usize>)>,
}

pub(crate) struct SearchOutcome {
    pub best: Option<(usize, Vec<usize>)>,
    pub nodes: u64,
    pub completed: bool,
}

struct Shared {
    incumbent: AtomicUsize,
    nodes: AtomicU64,
    abort: AtomicBool,
    next_root: AtomicUsize,
}

pub(crate) fn search(g: &SimpleGraph, cfg: &SearchConfig) -> SearchOutcome {
    let shared = Shared {
        incumbent: AtomicUsize::new(cfg.seed.as_ref().map_or(usize::MAX, |s| s.0)),
        nodes: AtomicU64::new(0),
        abort: AtomicBool::new(false),
        next_root: AtomicUsize::new(0),
    };
    let threads = cfg.threads.max(1);
    let results: Vec<Option<(usize, Vec<usize>)>> = if threads == 1 {
        vec![Worker::new(g, cfg, &shared).run()]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|_| scope.spawn(|| Worker::new(g, cfg, &shared).run()))
                .collect();
            handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
        })
    };
    let best = results.into_iter().flatten().chain(cfg.seed.clone()).min();
    SearchOutcome {
        best,
        nodes: shared.nodes.load(Ordering::Relaxed),
        completed: !shared.abort.load(Ordering::Relaxed),
    }
}

struct Worker<'a> {
    g: &'a SimpleGraph,
    cfg: &'a SearchConfig,
    shared: &'a Shared,
    h: usize,
    cap: usize,

    in_x: Vec<bool>,
    forbidden: Vec<bool>,
    in_ext: Vec<bool>,
    /// Neighbours inside X, for every vertex.
    cnt_in: Vec<usize>,
    x: Vec<usize>,
    /// Addable vertices adjacent to X. Mutated with stack discipline.
    ext: Vec<usize>,
    boundary: usize,
    forced: usize,
    /// Members of X with fewer than h internal neighbours.
    deficient: usize,
    /// Vertices outside X with fewer than h outside neighbours.
    bad_outside: usize,
    /// The subset of `bad_outside` that is forbidden.
    bad_forbidden: usize,

    best: Option<(usize, Vec<usize>)>,
    pending_nodes: u64,
    check_every: u64,
}

impl<'a> Worker<'a> {
    fn new(g: &'a SimpleGraph, cfg: &'a SearchConfig, shared: &'a Shared) -> Self {
        let n = g.vertex_count();
        Worker {
            g,
            cfg,
            shared,
            h: cfg.h,
            cap: 0,
            in_x: vec![false; n],
            forbidden: vec![false; n],
            in_ext: vec![false; n],
            cnt_in: vec![0; n],
            x: Vec::new(),
            ext: Vec::new(),
            boundary: 0,
            forced: 0,
            deficient: 0,
            bad_outside: 0,
            bad_forbidden: 0,
            best: None,
            pending_nodes: 0,
            check_every: CHECK_EVERY.min(cfg.node_limit.max(1)),
        }
    }

    fn run(mut self) -> Option<(usize, Vec<usize>)> {
        let n = self.g.vertex_count();
        loop {
            let root = self.shared.next_root.fetch_add(1, Ordering::Relaxed);
            if root >= n || self.aborted() {
                break;
            }
            // a side of exactly n/2 is only taken when it holds vertex 0
            let half = if root == 0 { n / 2 } else { (n - 1) / 2 };
            self.cap = half.min(self.cfg.size_cap);
            if self.cap == 0 {
                continue;
            }
            for v in 0..n {
                self.forbidden[v] = v < root;
            }
            let added = self.include(root);
            self.tick();
            self.score();
            if !self.prune() {
                self.branch();
            }
            self.undo_include(root, added, None);
            debug_assert!(self.x.is_empty() && self.ext.is_empty());
            debug_assert_eq!((self.boundary, self.forced, self.deficient, self.bad_forbidden), (0, 0, 0, 0));
        }
        self.shared.nodes.fetch_add(self.pending_nodes, Ordering::Relaxed);
        self.best
    }

    fn aborted(&self) -> bool {
        self.shared.abort.load(Ordering::Relaxed)
    }

    fn tick(&mut self) {
        self.pending_nodes += 1;
        if self.pending_nodes >= self.check_every {
            let total = self.shared.nodes.fetch_add(self.pending_nodes, Ordering::Relaxed) + self.pending_nodes;
            self.pending_nodes = 0;
            if total >= self.cfg.node_limit || Instant::now() >= self.cfg.deadline {
                self.shared.abort.store(true, Ordering::Relaxed);
            }
        }
    }

    fn threshold(&self) -> usize {
        let shared = self.shared.incumbent.load(Ordering::Relaxed);
        self.best.as_ref().map_or(shared, |b| b.0.min(shared))
    }

    fn branch(&mut self) {
        if self.aborted() || self.x.len() >= self.cap {
            return;
        }
        // fail-first: the candidate with the most neighbours in X
        let Some(pos) = (0..self.ext.len()).max_by_key(|&i| {
            let v = self.ext[i];
            (self.cnt_in[v], std::cmp::Reverse(v))
        }) else {
            return;
        };
        let v = self.ext[pos];

        let added = self.include(v);
        self.tick();
        self.score();
        if !self.prune() {
            self.branch();
        }
        self.undo_include(v, added, Some(pos));

        self.exclude(v, pos);
        self.tick();
        if !self.prune() {
            self.branch();
        }
        self.undo_exclude(v, pos);
    }

    /// Moves `v` into X. Returns how many vertices were appended to `ext`.
    fn include(&mut self, v: usize) -> usize {
        let h = self.h;
        let g = self.g;
        if self.in_ext[v] {
            let pos = self.ext.iter().position(|&u| u == v).expect("flagged in ext");
            self.ext.remove(pos);
            self.in_ext[v] = false;
        }
        self.in_x[v] = true;
        self.x.push(v);
        let deg = g.degree(v);
        self.boundary = self.boundary + deg - 2 * self.cnt_in[v];
        if deg - self.cnt_in[v] < h {
            self.bad_outside -= 1;
        }
        if self.cnt_in[v] < h {
            self.deficient += 1;
        }
        let mut added = 0;
        for &u in g.neighbors(v) {
            self.cnt_in[u] += 1;
            if self.in_x[u] {
                if self.cnt_in[u] == h {
                    self.deficient -= 1;
                }
                continue;
            }
            if h > 0 && g.degree(u) + 1 == self.cnt_in[u] + h {
                self.bad_outside += 1;
                if self.forbidden[u] {
                    self.bad_forbidden += 1;
                }
            }
            if self.forbidden[u] {
                self.forced += 1;
            } else if !self.in_ext[u] {
                self.in_ext[u] = true;
                self.ext.push(u);
                added += 1;
            }
        }
        added
    }

    fn undo_include(&mut self, v: usize, added: usize, ext_pos: Option<usize>) {
        let h = self.h;
        let g = self.g;
        for &u in g.neighbors(v) {
            if self.in_x[u] {
                if self.cnt_in[u] == h {
                    self.deficient += 1;
                }
            } else {
                if h > 0 && g.degree(u) + 1 == self.cnt_in[u] + h {
                    self.bad_outside -= 1;
                    if self.forbidden[u] {
                        self.bad_forbidden -= 1;
                    }
                }
                if self.forbidden[u] {
                    self.forced -= 1;
                }
            }
            self.cnt_in[u] -= 1;
        }
        for u in self.ext.drain(self.ext.len() - added..) {
            self.in_ext[u] = false;
        }
        let deg = g.degree(v);
        if self.cnt_in[v] < h {
            self.deficient -= 1;
        }
        if deg - self.cnt_in[v] < h {
            self.bad_outside += 1;
        }
        self.boundary = self.boundary + 2 * self.cnt_in[v] - deg;
        self.in_x[v] = false;
        self.x.pop();
        if let Some(pos) = ext_pos {
            self.ext.insert(pos, v);
            self.in_ext[v] = true;
        }
    }

    fn exclude(&mut self, v: usize, pos: usize) {
        self.ext.remove(pos);
        self.in_ext[v] = false;
        self.forbidden[v] = true;
        self.forced += self.cnt_in[v];
        if self.g.degree(v) - self.cnt_in[v] < self.h {
            self.bad_forbidden += 1;
        }
    }

    fn undo_exclude(&mut self, v: usize, pos: usize) {
        if self.g.degree(v) - self.cnt_in[v] < self.h {
            self.bad_forbidden -= 1;
        }
        self.forced -= self.cnt_in[v];
        self.forbidden[v] = false;
        self.ext.insert(pos, v);
        self.in_ext[v] = true;
    }

    fn score(&mut self) {
        if self.deficient > 0 || self.bad_outside > 0 {
            return;
        }
        let value = self.boundary;
        let threshold = self.threshold();
        if value > threshold {
            return;
        }
        let mut side = self.x.clone();
        side.sort_unstable();
        let candidate = (value, side);
        if self.best.as_ref().is_none_or(|b| candidate < *b) {
            self.best = Some(candidate);
            self.shared.incumbent.fetch_min(value, Ordering::Relaxed);
        }
    }

    fn prune(&self) -> bool {
        if self.bad_forbidden > 0 || self.forced > self.threshold() {
            return true;
        }
        if self.deficient == 0 {
            return false;
        }
        let room = self.cap - self.x.len();
        self.x.iter().any(|&v| {
            let have = self.cnt_in[v];
            if have >= self.h {
                return false;
            }
            let need = self.h - have;
            if need > room {
                return true;
            }
            let addable = self
                .g
                .neighbors(v)
                .iter()
                .filter(|&&u| !self.in_x[u] && !self.forbidden[u])
                .count();
            addable < need
        })
    }
}
