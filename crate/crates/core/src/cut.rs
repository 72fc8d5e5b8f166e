//! Edge boundaries, h-super edge-cut verification and the clique-based cuts
//! that bound the h-super edge-connectivity of `S(n,k)` from above.

use std::collections::BTreeSet;

use serde::Serialize;
use serde_json::{json, Value};

use crate::decomposition::clique_of;
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, StarGraph};
use crate::perm::PermLabel;

/// A vertex side `X` together with its boundary `B` and the degree profile
/// of `G - B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutWitness {
    /// Ascending.
    pub x: Vec<usize>,
    /// Boundary edges `(u, v)` with `u < v`, sorted.
    pub b: Vec<(usize, usize)>,
    pub h: usize,
    pub min_deg_inside: usize,
    pub min_deg_outside: usize,
    pub components: usize,
    pub valid: bool,
}

impl CutWitness {
    pub fn from_side(g: &SimpleGraph, x: &[usize], h: usize) -> Result<Self> {
        let x = normalize_side(g, x)?;
        let mut inside = vec![false; g.vertex_count()];
        x.iter().for_each(|&v| inside[v] = true);

        let b = boundary_of(g, &inside);
        let internal = |v: usize| g.neighbors(v).iter().filter(|&&u| inside[u] == inside[v]).count();
        let min_deg_inside = x.iter().map(|&v| internal(v)).min().unwrap_or(0);
        let min_deg_outside =
            (0..g.vertex_count()).filter(|&v| !inside[v]).map(internal).min().unwrap_or(0);
        let (_, components) = g.components_without(|u, v| inside[u] != inside[v]);
        let valid = components >= 2 && min_deg_inside.min(min_deg_outside) >= h;
        Ok(Self { x, b, h, min_deg_inside, min_deg_outside, components, valid })
    }

    /// `|B|`.
    pub fn value(&self) -> usize {
        self.b.len()
    }

    /// JSON with vertices rendered through `name`.
    pub fn to_json(&self, name: impl Fn(usize) -> String) -> Value {
        json!({
            "X": self.x.iter().map(|&v| name(v)).collect::<Vec<_>>(),
            "B": self.b.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
            "h": self.h,
            "valid": self.valid,
            "components": self.components,
            "minDegInside": self.min_deg_inside,
            "minDegOutside": self.min_deg_outside,
        })
    }
}

/// Diagnostics for an arbitrary edge set removed from a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutReport {
    pub h: usize,
    pub components: usize,
    /// Sizes in order of each component's smallest vertex.
    pub component_sizes: Vec<usize>,
    pub min_degree: usize,
    /// Vertices left with degree below `h`.
    pub low_degree: Vec<usize>,
    pub valid: bool,
}

fn normalize_side(g: &SimpleGraph, x: &[usize]) -> Result<Vec<usize>> {
    let set: BTreeSet<usize> = x.iter().copied().collect();
    if let Some(&bad) = set.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(Error::Index { index: bad, len: g.vertex_count() });
    }
    if set.is_empty() || set.len() == g.vertex_count() {
        return Err(Error::Parameter(format!(
            "cut side must be a nonempty proper subset, got {} of {} vertices",
            set.len(),
            g.vertex_count()
        )));
    }
    Ok(set.into_iter().collect())
}

fn boundary_of(g: &SimpleGraph, inside: &[bool]) -> Vec<(usize, usize)> {
    g.edges().into_iter().filter(|&(u, v)| inside[u] != inside[v]).collect()
}

/// Edges with exactly one endpoint in `x`.
pub fn boundary(g: &SimpleGraph, x: &[usize]) -> Result<Vec<(usize, usize)>> {
    let x = normalize_side(g, x)?;
    let mut inside = vec![false; g.vertex_count()];
    x.iter().for_each(|&v| inside[v] = true);
    Ok(boundary_of(g, &inside))
}

/// Removes `b` from `g` and checks the h-super edge-cut conditions: at least
/// two components and every vertex keeping degree `>= h`.
pub fn verify_h_edge_cut(g: &SimpleGraph, b: &[(usize, usize)], h: usize) -> Result<CutReport> {
    let mut removed = BTreeSet::new();
    for &(u, v) in b {
        if !g.has_edge(u, v) {
            return Err(Error::UnknownEdge(u, v));
        }
        removed.insert((u.min(v), u.max(v)));
    }
    let mut degree: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    for &(u, v) in &removed {
        degree[u] -= 1;
        degree[v] -= 1;
    }
    let (comp, components) = g.components_without(|u, v| removed.contains(&(u.min(v), u.max(v))));
    let mut component_sizes = vec![0; components];
    comp.iter().for_each(|&c| component_sizes[c] += 1);
    let low_degree: Vec<usize> = (0..g.vertex_count()).filter(|&v| degree[v] < h).collect();
    Ok(CutReport {
        h,
        components,
        component_sizes,
        min_degree: degree.iter().copied().min().unwrap_or(0),
        valid: components >= 2 && low_degree.is_empty(),
        low_degree,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CliqueCutMode {
    /// `X` = the `h+1` smallest members of the clique.
    SubClique,
    /// `X` = the whole clique.
    FullClique,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructedCut {
    pub witness: CutWitness,
    pub mode: CliqueCutMode,
    /// Whether the construction is guaranteed to yield an h-edge-cut:
    /// `2h <= n-2` for `SubClique`, always for `FullClique`.
    pub hypothesis_holds: bool,
}

/// Cut isolating `h+1` vertices of the clique at `alpha`, or all of it.
pub fn construct_cut(
    g: &StarGraph,
    h: usize,
    alpha: &PermLabel,
    mode: CliqueCutMode,
) -> Result<ConstructedCut> {
    let (n, k) = (g.n(), g.k());
    let clique = clique_of(g, alpha)?;
    let x: &[usize] = match mode {
        CliqueCutMode::SubClique => {
            if h + 1 > clique.members.len() {
                return Err(Error::Size(format!(
                    "h+1 = {} exceeds clique order n-k+1 = {}",
                    h + 1,
                    clique.members.len()
                )));
            }
            &clique.members[..h + 1]
        }
        CliqueCutMode::FullClique => {
            if h > n - k {
                return Err(Error::TheoremRange(format!("h <= n-k violated: h = {h}, n-k = {}", n - k)));
            }
            &clique.members
        }
    };
    let witness = CutWitness::from_side(g.topology(), x, h)?;
    let hypothesis_holds = match mode {
        CliqueCutMode::SubClique => 2 * h + 2 <= n,
        CliqueCutMode::FullClique => true,
    };
    Ok(ConstructedCut { witness, mode, hypothesis_holds })
}

/// The construction attaining the closed-form value for `(n,k,h)`:
/// `SubClique` when `h <= k-2` and `2h <= n-2`, `FullClique` otherwise.
pub fn theorem_cut(g: &StarGraph, h: usize, alpha: &PermLabel) -> Result<ConstructedCut> {
    let (n, k) = (g.n(), g.k());
    let mode = if h + 2 <= k && 2 * h + 2 <= n {
        CliqueCutMode::SubClique
    } else {
        CliqueCutMode::FullClique
    };
    construct_cut(g, h, alpha, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphSpec;

    fn star(n: usize, k: usize) -> StarGraph {
        StarGraph::build(GraphSpec::new(n, k).unwrap()).unwrap()
    }

    fn ids(g: &StarGraph, names: &[&str]) -> Vec<usize> {
        names.iter().map(|s| g.parse_vertex(s).unwrap()).collect()
    }

    #[test]
    fn sub_clique_s53() {
        let g = star(5, 3);
        let alpha = PermLabel::parse("23", 5).unwrap();
        let c = construct_cut(&g, 1, &alpha, CliqueCutMode::SubClique).unwrap();
        let mut want = ids(&g, &["123", "423"]);
        want.sort_unstable();
        assert_eq!(c.witness.x, want);
        assert_eq!(c.witness.value(), 6);
        assert!(c.witness.valid && c.hypothesis_holds);
    }

    #[test]
    fn full_clique_s53() {
        let g = star(5, 3);
        let alpha = PermLabel::parse("23", 5).unwrap();
        let c = construct_cut(&g, 2, &alpha, CliqueCutMode::FullClique).unwrap();
        assert_eq!(c.witness.x.len(), 3);
        assert_eq!(c.witness.value(), 6);
        assert!(c.witness.valid);
        assert!(construct_cut(&g, 3, &alpha, CliqueCutMode::FullClique).is_err());
    }

    #[test]
    fn single_vertex_cut_in_sn2() {
        for n in 3..=6 {
            let g = star(n, 2);
            let alpha = PermLabel::parse("2", n).unwrap();
            let c = construct_cut(&g, 0, &alpha, CliqueCutMode::SubClique).unwrap();
            assert_eq!(c.witness.x.len(), 1);
            assert_eq!(c.witness.value(), n - 1);
            assert!(c.witness.valid);
        }
    }

    #[test]
    fn sub_clique_size_error() {
        let g = star(5, 3);
        let alpha = PermLabel::parse("23", 5).unwrap();
        assert!(matches!(
            construct_cut(&g, 3, &alpha, CliqueCutMode::SubClique),
            Err(Error::Size(_))
        ));
    }

    #[test]
    fn odd_n_boundary_case_is_flagged_invalid() {
        // n = 5, h = 2 = (n-1)/2: the one clique vertex left behind keeps
        // degree n-h-2 = 1 < h.
        let g = star(5, 2);
        let alpha = PermLabel::parse("2", 5).unwrap();
        let c = construct_cut(&g, 2, &alpha, CliqueCutMode::SubClique).unwrap();
        assert!(!c.hypothesis_holds);
        assert!(!c.witness.valid);
        assert_eq!(c.witness.min_deg_outside, 1);
    }

    #[test]
    fn boundary_examples() {
        let g = star(4, 2);
        let t = g.topology();
        assert_eq!(boundary(t, &[0]).unwrap().len(), 3);
        let clique = ids(&g, &["21", "31", "41"]);
        assert_eq!(boundary(t, &clique).unwrap().len(), 3);
        let all_but_one: Vec<usize> = (1..12).collect();
        assert_eq!(boundary(t, &all_but_one).unwrap(), boundary(t, &[0]).unwrap());
        assert!(boundary(t, &[]).is_err());
        assert!(boundary(t, &(0..12).collect::<Vec<_>>()).is_err());
        assert!(boundary(t, &[12]).is_err());
    }

    #[test]
    fn verify_examples() {
        let g = star(4, 2);
        let t = g.topology();
        let b = boundary(t, &ids(&g, &["21", "31", "41"])).unwrap();
        let r = verify_h_edge_cut(t, &b, 2).unwrap();
        assert!(r.valid);
        assert_eq!(r.components, 2);
        assert_eq!(r.component_sizes.iter().sum::<usize>(), 12);
        assert!(r.component_sizes.contains(&3) && r.component_sizes.contains(&9));

        let r = verify_h_edge_cut(t, &t.edges()[..1], 0).unwrap();
        assert!(!r.valid);
        assert_eq!(r.components, 1);

        let r = verify_h_edge_cut(t, &[], 0).unwrap();
        assert!(!r.valid);
        assert_eq!(r.components, 1);

        assert!(matches!(verify_h_edge_cut(t, &[(0, 0)], 0), Err(Error::UnknownEdge(0, 0))));
    }

    #[test]
    fn verify_lists_low_degree_vertices() {
        let g = star(4, 2);
        let t = g.topology();
        let b = boundary(t, &[0]).unwrap();
        let r = verify_h_edge_cut(t, &b, 1).unwrap();
        assert_eq!(r.low_degree, vec![0]);
        assert!(!r.valid);
        assert!(verify_h_edge_cut(t, &b, 0).unwrap().valid);
    }

    #[test]
    fn witness_json_shape() {
        let g = star(4, 2);
        let w = CutWitness::from_side(g.topology(), &[0], 0).unwrap();
        let v = w.to_json(|i| g.name(i));
        assert_eq!(v["X"], json!(["12"]));
        assert_eq!(v["B"].as_array().unwrap().len(), 3);
        assert_eq!(v["components"], json!(2));
        assert_eq!(v["minDegInside"], json!(0));
        assert_eq!(v["minDegOutside"], json!(2));
    }
}
