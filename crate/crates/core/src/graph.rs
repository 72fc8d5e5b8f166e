//! The (n,k)-star graph and the plain adjacency structure the solvers run on.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{falling_factorial, PermLabel};

/// Largest vertex table `build` will allocate.
pub const MAX_VERTICES: usize = 5_000_000;

/// Parameters of `S(n,k)`: `n >= 2`, `1 <= k <= n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphSpec {
    pub n: usize,
    pub k: usize,
}

impl GraphSpec {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Parameter(format!("n must be >= 2, got {n}")));
        }
        if k < 1 {
            return Err(Error::Parameter(format!("k must be >= 1, got {k}")));
        }
        if k > n - 1 {
            return Err(Error::Parameter(format!("k must be <= n-1 = {}, got {k}", n - 1)));
        }
        Ok(Self { n, k })
    }

    /// `n!/(n-k)!`, or `None` if it overflows.
    pub fn vertex_count(&self) -> Option<usize> {
        falling_factorial(self.n, self.k)
    }

    /// Rejects `k = 1`, which the fault-tolerance results exclude.
    pub fn require_theorem_k(&self) -> Result<()> {
        if self.k < 2 {
            return Err(Error::TheoremRange(format!("k must be >= 2, got {}", self.k)));
        }
        Ok(())
    }
}

/// Kind of an edge of `S(n,k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeTag {
    /// First symbol exchanged with the symbol at this (1-based) position, `2..=k`.
    Swap(usize),
    /// First symbol replaced by a symbol that does not occur in the label.
    Unswap,
}

impl fmt::Display for EdgeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeTag::Swap(i) => write!(f, "swap_{i}"),
            EdgeTag::Unswap => f.write_str("unswap"),
        }
    }
}

impl std::str::FromStr for EdgeTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "unswap" {
            return Ok(EdgeTag::Unswap);
        }
        s.strip_prefix("swap_")
            .and_then(|i| i.parse().ok())
            .filter(|&i: &usize| i >= 2)
            .map(EdgeTag::Swap)
            .ok_or_else(|| Error::Format(format!("unknown edge tag {s:?}")))
    }
}

/// Undirected simple graph on `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Builds from an edge list, rejecting loops, parallel edges and
    /// out-of-range endpoints.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::Index { index: u.max(v), len: vertex_count });
            }
            if u == v {
                return Err(Error::Parameter(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Parameter(format!("parallel edge at vertex {u}")));
            }
        }
        Ok(Self { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Component id per vertex (numbered by smallest member) and the
    /// component count, ignoring any edge for which `removed` is true.
    pub fn components_without(&self, removed: impl Fn(usize, usize) -> bool) -> (Vec<usize>, usize) {
        let n = self.adj.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if comp[v] == usize::MAX && !removed(u, v) {
                        comp[v] = count;
                        queue.push_back(v);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components_without(|_, _| false).1 <= 1
    }

    /// Subgraph induced by `vertices`, relabelled by position in the slice.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut pos = vec![usize::MAX; self.adj.len()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> =
                    self.adj[v].iter().map(|&u| pos[u]).filter(|&p| p != usize::MAX).collect();
                list.sort_unstable();
                list
            })
            .collect();
        SimpleGraph { adj }
    }
}

/// `S(n,k)`: all k-permutations of `1..=n`, indexed in lexicographic order,
/// with tagged adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarGraph {
    spec: GraphSpec,
    labels: Vec<PermLabel>,
    topology: SimpleGraph,
    // parallel to topology's adjacency lists
    tags: Vec<Vec<EdgeTag>>,
}

impl StarGraph {
    pub fn build(spec: GraphSpec) -> Result<Self> {
        let GraphSpec { n, k } = GraphSpec::new(spec.n, spec.k)?;
        let count = spec
            .vertex_count()
            .filter(|&c| c <= MAX_VERTICES)
            .ok_or_else(|| Error::Size(format!("S({n},{k}) exceeds {MAX_VERTICES} vertices")))?;

        let labels: Vec<PermLabel> =
            (0..count).map(|i| PermLabel::unrank(i, n, k)).collect::<Result<_>>()?;

        let mut adj = Vec::with_capacity(count);
        let mut tags = Vec::with_capacity(count);
        let mut present = vec![false; n + 1];
        for label in &labels {
            let p = label.symbols();
            let mut entries: Vec<(usize, EdgeTag)> = Vec::with_capacity(n - 1);
            for i in 2..=k {
                let mut q = p.to_vec();
                q.swap(0, i - 1);
                entries.push((PermLabel::from_raw(q).rank(n)?, EdgeTag::Swap(i)));
            }
            present.iter_mut().for_each(|b| *b = false);
            p.iter().for_each(|&s| present[s] = true);
            for alpha in (1..=n).filter(|&a| !present[a]) {
                let mut q = p.to_vec();
                q[0] = alpha;
                entries.push((PermLabel::from_raw(q).rank(n)?, EdgeTag::Unswap));
            }
            entries.sort_unstable();
            adj.push(entries.iter().map(|e| e.0).collect());
            tags.push(entries.into_iter().map(|e| e.1).collect());
        }

        Ok(Self { spec, labels, topology: SimpleGraph { adj }, tags })
    }

    pub fn spec(&self) -> GraphSpec {
        self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    pub fn k(&self) -> usize {
        self.spec.k
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.topology.edge_count()
    }

    pub fn topology(&self) -> &SimpleGraph {
        &self.topology
    }

    pub fn label(&self, v: usize) -> Result<&PermLabel> {
        self.labels.get(v).ok_or(Error::Index { index: v, len: self.labels.len() })
    }

    pub fn labels(&self) -> &[PermLabel] {
        &self.labels
    }

    /// Text form of vertex `v`'s label.
    pub fn name(&self, v: usize) -> String {
        self.labels[v].render(self.spec.n)
    }

    /// Index of a label, validating its length against `k`.
    pub fn index_of(&self, label: &PermLabel) -> Result<usize> {
        if label.len() != self.spec.k {
            return Err(Error::Label(format!(
                "label has length {}, expected {}",
                label.len(),
                self.spec.k
            )));
        }
        label.rank(self.spec.n)
    }

    pub fn parse_vertex(&self, text: &str) -> Result<usize> {
        self.index_of(&PermLabel::parse(text, self.spec.n)?)
    }

    /// Tagged neighbors of `v`, ordered by neighbor index.
    pub fn neighbors(&self, v: usize) -> Result<Vec<(usize, EdgeTag)>> {
        if v >= self.vertex_count() {
            return Err(Error::Index { index: v, len: self.vertex_count() });
        }
        Ok(self.topology.adj[v].iter().copied().zip(self.tags[v].iter().copied()).collect())
    }

    /// Tag of edge `{u, v}`, if it exists.
    pub fn tag(&self, u: usize, v: usize) -> Option<EdgeTag> {
        let pos = self.topology.adj.get(u)?.binary_search(&v).ok()?;
        Some(self.tags[u][pos])
    }

    /// All edges `(u, v, tag)` with `u < v`, sorted.
    pub fn tagged_edges(&self) -> Vec<(usize, usize, EdgeTag)> {
        self.topology
            .edges()
            .into_iter()
            .map(|(u, v)| (u, v, self.tag(u, v).expect("edge from adjacency")))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(n: usize, k: usize) -> StarGraph {
        StarGraph::build(GraphSpec::new(n, k).unwrap()).unwrap()
    }

    #[test]
    fn spec_bounds() {
        assert!(GraphSpec::new(1, 1).is_err());
        assert!(GraphSpec::new(4, 0).is_err());
        let err = GraphSpec::new(4, 4).unwrap_err();
        assert!(err.to_string().contains("n-1"), "{err}");
        assert!(GraphSpec::new(4, 3).is_ok());
        assert!(GraphSpec::new(4, 1).unwrap().require_theorem_k().is_err());
    }

    #[test]
    fn s42_shape() {
        let g = star(4, 2);
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 18);
        assert!((0..12).all(|v| g.topology().degree(v) == 3));
    }

    #[test]
    fn s32_is_a_six_cycle() {
        let g = star(3, 2);
        let t = g.topology();
        assert_eq!(t.vertex_count(), 6);
        assert!((0..6).all(|v| t.degree(v) == 2));
        // walk the cycle from vertex 0; a single cycle visits all 6 before returning
        let (mut prev, mut cur, mut steps) = (0, t.neighbors(0)[0], 1);
        while cur != 0 {
            let next = *t.neighbors(cur).iter().find(|&&w| w != prev).unwrap();
            prev = cur;
            cur = next;
            steps += 1;
        }
        assert_eq!(steps, 6);
    }

    #[test]
    fn neighbors_of_12_in_s42() {
        let g = star(4, 2);
        let v = g.parse_vertex("12").unwrap();
        let got: Vec<(String, EdgeTag)> =
            g.neighbors(v).unwrap().into_iter().map(|(u, t)| (g.name(u), t)).collect();
        assert_eq!(
            got,
            vec![
                ("21".to_string(), EdgeTag::Swap(2)),
                ("32".to_string(), EdgeTag::Unswap),
                ("42".to_string(), EdgeTag::Unswap),
            ]
        );
    }

    #[test]
    fn neighbors_of_123_in_s53() {
        let g = star(5, 3);
        let v = g.parse_vertex("123").unwrap();
        let nb = g.neighbors(v).unwrap();
        let mut swaps: Vec<String> =
            nb.iter().filter(|e| matches!(e.1, EdgeTag::Swap(_))).map(|e| g.name(e.0)).collect();
        let mut unswaps: Vec<String> =
            nb.iter().filter(|e| e.1 == EdgeTag::Unswap).map(|e| g.name(e.0)).collect();
        swaps.sort();
        unswaps.sort();
        assert_eq!(swaps, ["213", "321"]);
        assert_eq!(unswaps, ["423", "523"]);
        assert_eq!(g.tag(v, g.parse_vertex("321").unwrap()), Some(EdgeTag::Swap(3)));
    }

    #[test]
    fn neighbors_out_of_range() {
        let g = star(3, 2);
        assert!(matches!(g.neighbors(6), Err(Error::Index { index: 6, len: 6 })));
    }

    #[test]
    fn k_one_is_complete() {
        let g = star(5, 1);
        let t = g.topology();
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(t.has_edge(u, v), u != v);
            }
        }
    }

    #[test]
    fn edge_tag_text() {
        assert_eq!(EdgeTag::Swap(3).to_string(), "swap_3");
        assert_eq!("swap_3".parse::<EdgeTag>().unwrap(), EdgeTag::Swap(3));
        assert_eq!("unswap".parse::<EdgeTag>().unwrap(), EdgeTag::Unswap);
        assert!("swap_1".parse::<EdgeTag>().is_err());
        assert!("swap".parse::<EdgeTag>().is_err());
    }

    #[test]
    fn simple_graph_rejects_multi_edges() {
        assert!(SimpleGraph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::from_edges(3, &[(1, 1)]).is_err());
        assert!(SimpleGraph::from_edges(3, &[(0, 3)]).is_err());
        let g = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.components_without(|_, _| false).1, 2);
    }
}
