//! Canonical graph serializations: JSON, DOT and an edge CSV.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeTag, GraphSpec, StarGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct GraphDocument {
    n: usize,
    k: usize,
    vertices: Vec<String>,
    edges: Vec<(usize, usize, String)>,
}

/// `{"n":…,"k":…,"vertices":[labels in rank order],"edges":[[u,v,tag]…]}`
/// with `u < v` and edges sorted.
pub fn to_json(g: &StarGraph) -> String {
    let doc = GraphDocument {
        n: g.n(),
        k: g.k(),
        vertices: (0..g.vertex_count()).map(|v| g.name(v)).collect(),
        edges: g.tagged_edges().into_iter().map(|(u, v, t)| (u, v, t.to_string())).collect(),
    };
    serde_json::to_string(&doc).expect("graph document serializes")
}

/// Parses a canonical document and checks it against a fresh build of
/// `S(n,k)`.
pub fn from_json(text: &str) -> Result<StarGraph> {
    let doc: GraphDocument = serde_json::from_str(text)?;
    let g = StarGraph::build(GraphSpec::new(doc.n, doc.k)?)?;
    if doc.vertices.len() != g.vertex_count() {
        return Err(Error::Format(format!(
            "expected {} vertices, found {}",
            g.vertex_count(),
            doc.vertices.len()
        )));
    }
    for (v, name) in doc.vertices.iter().enumerate() {
        if g.parse_vertex(name)? != v {
            return Err(Error::Format(format!("vertex {name:?} listed out of rank order at {v}")));
        }
    }
    let edges = doc
        .edges
        .iter()
        .map(|(u, v, tag)| Ok((*u, *v, tag.parse::<EdgeTag>()?)))
        .collect::<Result<Vec<_>>>()?;
    if edges != g.tagged_edges() {
        return Err(Error::Format(format!("edge list does not match S({},{})", doc.n, doc.k)));
    }
    Ok(g)
}

/// Undirected DOT; nodes are labelled by permutation, edges carry `tag`.
pub fn to_dot(g: &StarGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"S({},{})\" {{", g.n(), g.k());
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", g.name(v));
    }
    for (u, v, tag) in g.tagged_edges() {
        let _ = writeln!(out, "  {u} -- {v} [tag={tag}];");
    }
    out.push_str("}\n");
    out
}

/// One row per edge: `u,v,u_label,v_label,tag`, with a header line.
pub fn to_csv_edges(g: &StarGraph) -> String {
    let mut out = String::from("u,v,u_label,v_label,tag\n");
    for (u, v, tag) in g.tagged_edges() {
        // labels for n > 9 contain commas
        let _ = writeln!(out, "{u},{v},\"{}\",\"{}\",{tag}", g.name(u), g.name(v));
    }
    out
}
