//! Splitting `S(n,k)` along a bit position into `n` copies of
//! `S(n-1,k-1)`, and the cliques formed by vertices that agree on bits `2..=k`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{GraphSpec, StarGraph};
use crate::perm::PermLabel;

/// Partition of `S(n,k)` by the symbol at position `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionView {
    t: usize,
    n: usize,
    /// `parts[i - 1]` holds the vertices whose bit `t` is `i`, ascending.
    parts: Vec<Vec<usize>>,
    part_of: Vec<usize>,
    /// Edges between parts `i < j`, keyed `(i, j)`, sorted by endpoints.
    cross: BTreeMap<(usize, usize), Vec<(usize, usize)>>,
}

/// JSON summary used in reports.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionSummary {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub part_sizes: Vec<usize>,
    /// `"i-j"` to edge count.
    pub cross_counts: BTreeMap<String, usize>,
    pub cross_matchings: bool,
}

pub fn decompose(g: &StarGraph, t: usize) -> Result<DecompositionView> {
    let (n, k) = (g.n(), g.k());
    if k < 2 {
        return Err(Error::Parameter(format!("decomposition needs k >= 2, got k = {k}")));
    }
    if !(2..=k).contains(&t) {
        return Err(Error::Parameter(format!("bit position t must be in 2..={k}, got {t}")));
    }
    let mut parts = vec![Vec::new(); n];
    let part_of: Vec<usize> = g.labels().iter().map(|l| l.bit(t)).collect();
    for (v, &i) in part_of.iter().enumerate() {
        parts[i - 1].push(v);
    }
    let mut cross: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    for i in 1..=n {
        for j in i + 1..=n {
            cross.insert((i, j), Vec::new());
        }
    }
    for (u, v) in g.topology().edges() {
        let (a, b) = (part_of[u], part_of[v]);
        if a != b {
            cross.get_mut(&(a.min(b), a.max(b))).expect("all pairs present").push((u, v));
        }
    }
    Ok(DecompositionView { t, n, parts, part_of, cross })
}

impl DecompositionView {
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn part_count(&self) -> usize {
        self.n
    }

    /// Vertices of part `i` (`1..=n`).
    pub fn part(&self, i: usize) -> Result<&[usize]> {
        self.check_symbol(i)?;
        Ok(&self.parts[i - 1])
    }

    /// Symbol at bit `t` of vertex `v`, i.e. the part containing it.
    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    /// Edges joining parts `i` and `j`, in either order.
    pub fn cross(&self, i: usize, j: usize) -> Result<&[(usize, usize)]> {
        self.check_symbol(i)?;
        self.check_symbol(j)?;
        if i == j {
            return Err(Error::Parameter(format!("cross edges need distinct parts, got {i} twice")));
        }
        Ok(&self.cross[&(i.min(j), i.max(j))])
    }

    pub fn cross_pairs(&self) -> impl Iterator<Item = ((usize, usize), &[(usize, usize)])> {
        self.cross.iter().map(|(&key, edges)| (key, edges.as_slice()))
    }

    /// True when every cross edge list is a matching.
    pub fn cross_lists_are_matchings(&self) -> bool {
        self.cross.values().all(|edges| {
            let mut ends: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            ends.sort_unstable();
            ends.windows(2).all(|w| w[0] != w[1])
        })
    }

    pub fn summary(&self, g: &StarGraph) -> DecompositionSummary {
        DecompositionSummary {
            n: g.n(),
            k: g.k(),
            t: self.t,
            part_sizes: self.parts.iter().map(Vec::len).collect(),
            cross_counts: self.cross.iter().map(|(&(i, j), e)| (format!("{i}-{j}"), e.len())).collect(),
            cross_matchings: self.cross_lists_are_matchings(),
        }
    }

    fn check_symbol(&self, i: usize) -> Result<()> {
        if !(1..=self.n).contains(&i) {
            return Err(Error::Parameter(format!("part symbol must be in 1..={}, got {i}", self.n)));
        }
        Ok(())
    }
}

/// A part of a decomposition identified with a freshly built `S(n-1,k-1)`.
#[derive(Debug, Clone)]
pub struct PartEmbedding {
    pub graph: StarGraph,
    /// `to_original[j]` is the vertex of the big graph mapped to `j`.
    pub to_original: Vec<usize>,
    to_part: BTreeMap<usize, usize>,
}

impl PartEmbedding {
    pub fn to_part(&self, v: usize) -> Option<usize> {
        self.to_part.get(&v).copied()
    }

    /// Checks that the mapping is a bijection preserving adjacency in both
    /// directions.
    pub fn is_isomorphism(&self, g: &StarGraph, part: &[usize]) -> bool {
        if part.len() != self.graph.vertex_count() || self.to_part.len() != part.len() {
            return false;
        }
        let big = g.topology();
        let small = self.graph.topology();
        part.iter().all(|&u| {
            let mu = self.to_part[&u];
            part.iter().all(|&v| big.has_edge(u, v) == small.has_edge(mu, self.to_part[&v]))
        })
    }
}

/// Maps part `i` onto `S(n-1,k-1)`: delete bit `t`, then shift symbols above
/// `i` down by one.
pub fn part_as_star(g: &StarGraph, view: &DecompositionView, i: usize) -> Result<PartEmbedding> {
    let part = view.part(i)?;
    let (n, k, t) = (g.n(), g.k(), view.t);
    let graph = StarGraph::build(GraphSpec::new(n - 1, k - 1)?)?;
    let mut to_original = vec![usize::MAX; graph.vertex_count()];
    let mut to_part = BTreeMap::new();
    for &v in part {
        let symbols: Vec<usize> = g.labels()[v]
            .symbols()
            .iter()
            .enumerate()
            .filter(|&(pos, _)| pos + 1 != t)
            .map(|(_, &s)| if s > i { s - 1 } else { s })
            .collect();
        let w = graph.index_of(&PermLabel::new(symbols, n - 1)?)?;
        to_original[w] = v;
        to_part.insert(v, w);
    }
    if to_original.contains(&usize::MAX) {
        return Err(Error::Size(format!("part {i} does not cover S({},{})", n - 1, k - 1)));
    }
    Ok(PartEmbedding { graph, to_original, to_part })
}

/// The vertices `p·alpha` for every symbol `p` absent from `alpha`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueHandle {
    pub alpha: PermLabel,
    /// Ascending vertex indices.
    pub members: Vec<usize>,
}

pub fn clique_of(g: &StarGraph, alpha: &PermLabel) -> Result<CliqueHandle> {
    let (n, k) = (g.n(), g.k());
    if k < 2 {
        return Err(Error::Parameter(format!("cliques need k >= 2, got k = {k}")));
    }
    if alpha.len() != k - 1 {
        return Err(Error::Label(format!("alpha must have length {}, got {}", k - 1, alpha.len())));
    }
    let alpha = PermLabel::new(alpha.symbols().to_vec(), n)?;
    let mut members = Vec::with_capacity(n - k + 1);
    for p in (1..=n).filter(|p| !alpha.symbols().contains(p)) {
        let mut symbols = vec![p];
        symbols.extend_from_slice(alpha.symbols());
        members.push(g.index_of(&PermLabel::new(symbols, n)?)?);
    }
    members.sort_unstable();
    Ok(CliqueHandle { alpha, members })
}

/// `2 3 ... k`: the tail of the identity label, so its clique contains vertex 0.
pub fn default_alpha(g: &StarGraph) -> Result<PermLabel> {
    if g.k() < 2 {
        return Err(Error::Parameter(format!("cliques need k >= 2, got k = {}", g.k())));
    }
    PermLabel::new((2..=g.k()).collect(), g.n())
}
