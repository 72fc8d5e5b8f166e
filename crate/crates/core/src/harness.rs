//! Verification sweeps, per-part cut analysis, randomized fault trials and
//! the report types behind the command-line tool.

use std::collections::BTreeSet;
use std::time::Duration;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cut::{theorem_cut, verify_h_edge_cut, CutWitness};
use crate::decomposition::{decompose, default_alpha, part_as_star, DecompositionView};
use crate::error::{Error, Result};
use crate::formula;
use crate::graph::{EdgeTag, GraphSpec, SimpleGraph, StarGraph};
use crate::io;
use crate::solver::{edge_connectivity, lambda_h_exact, SearchBudget};

/// Instances larger than this are left out of sweeps unless asked for.
pub const DEFAULT_SWEEP_MAX_VERTICES: usize = 120;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphInfo {
    pub n: usize,
    pub k: usize,
    pub vertices: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub swap_edges_per_vertex: usize,
    pub unswap_edges_per_vertex: usize,
    pub connected: bool,
    pub edge_connectivity: usize,
}

pub fn graph_info(g: &StarGraph) -> Result<GraphInfo> {
    let t = g.topology();
    let tag_count = |swap: bool| -> Result<Option<usize>> {
        let mut counts = BTreeSet::new();
        for v in 0..g.vertex_count() {
            let c = g.neighbors(v)?.iter().filter(|e| matches!(e.1, EdgeTag::Swap(_)) == swap).count();
            counts.insert(c);
        }
        Ok(if counts.len() == 1 { counts.first().copied() } else { None })
    };
    Ok(GraphInfo {
        n: g.n(),
        k: g.k(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        min_degree: t.min_degree(),
        max_degree: t.max_degree(),
        swap_edges_per_vertex: tag_count(true)?.ok_or_else(|| Error::Format("uneven swap degree".into()))?,
        unswap_edges_per_vertex: tag_count(false)?.ok_or_else(|| Error::Format("uneven unswap degree".into()))?,
        connected: t.is_connected(),
        edge_connectivity: edge_connectivity(t),
    })
}

// ---------------------------------------------------------------- sweeps

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub k: usize,
    pub h: usize,
    pub theorem_value: u64,
    pub solver_value: Option<usize>,
    pub exact: bool,
    /// Only decided for exact rows.
    pub matched: Option<bool>,
    pub witness_size: Option<usize>,
    pub witness_components: Option<usize>,
    pub nodes_explored: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SweepStatus {
    AllMatched,
    Mismatch,
    /// No mismatch, but at least one instance ran out of budget.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn status(&self) -> SweepStatus {
        if self.rows.iter().any(|r| r.matched == Some(false)) {
            SweepStatus::Mismatch
        } else if self.rows.iter().any(|r| !r.exact) {
            SweepStatus::Inconclusive
        } else {
            SweepStatus::AllMatched
        }
    }

    /// `n,k,h,theorem_value,solver_value,exact,match,elapsed_ms`. The timing
    /// column is left empty unless `timings` is set, so that reruns are
    /// byte-identical.
    pub fn to_csv(&self, timings: bool) -> String {
        let mut out = String::from("n,k,h,theorem_value,solver_value,exact,match,elapsed_ms\n");
        for r in &self.rows {
            let solver = r.solver_value.map_or(String::from("none"), |v| v.to_string());
            let matched = r.matched.map_or(String::new(), |m| m.to_string());
            let elapsed = if timings { r.elapsed.as_millis().to_string() } else { String::new() };
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.n, r.k, r.h, r.theorem_value, solver, r.exact, matched, elapsed
            ));
        }
        out
    }
}

/// `(n,k,h)` with `3 <= n <= n_max`, `2 <= k <= n-1`, `0 <= h <= n-k` and
/// at most `max_vertices` vertices, in lexicographic order.
pub fn sweep_instances(n_max: usize, max_vertices: usize) -> Result<Vec<(usize, usize, usize)>> {
    if n_max < 3 {
        return Err(Error::Parameter(format!("n_max must be >= 3, got {n_max}")));
    }
    let mut out = Vec::new();
    for n in 3..=n_max {
        for k in 2..n {
            let fits = GraphSpec::new(n, k)?.vertex_count().is_some_and(|c| c <= max_vertices);
            if fits {
                out.extend((0..=n - k).map(|h| (n, k, h)));
            }
        }
    }
    Ok(out)
}

pub fn verify_row(g: &StarGraph, h: usize, budget: &SearchBudget, threads: usize) -> Result<SweepRow> {
    let (n, k) = (g.n(), g.k());
    let f = formula::evaluate(n as u64, k as u64, h as u64)?;
    let r = lambda_h_exact(g, h, budget, threads)?;
    Ok(SweepRow {
        n,
        k,
        h,
        theorem_value: f.theorem_value,
        solver_value: r.value,
        exact: r.exact,
        matched: r.exact.then(|| r.value.map(|v| v as u64) == Some(f.theorem_value)),
        witness_size: r.witness.as_ref().map(|w| w.x.len()),
        witness_components: r.witness.as_ref().map(|w| w.components),
        nodes_explored: r.nodes_explored,
        elapsed: r.elapsed,
    })
}

/// Runs the exact solver on every sweep instance and compares with the
/// closed form. `on_row` sees each row as soon as it is computed.
pub fn verify_sweep(
    n_max: usize,
    max_vertices: usize,
    budget: &SearchBudget,
    threads: usize,
    mut on_row: impl FnMut(&SweepRow),
) -> Result<SweepReport> {
    let mut report = SweepReport::default();
    let mut current: Option<StarGraph> = None;
    for (n, k, h) in sweep_instances(n_max, max_vertices)? {
        if current.as_ref().is_none_or(|g| (g.n(), g.k()) != (n, k)) {
            current = Some(StarGraph::build(GraphSpec::new(n, k)?)?);
        }
        let row = verify_row(current.as_ref().expect("built above"), h, budget, threads)?;
        on_row(&row);
        report.rows.push(row);
    }
    Ok(report)
}

// ---------------------------------------------------- per-part analysis

/// How a cut `(X, B)` meets the parts of a decomposition along bit `t`.
/// Vectors indexed by part are 0-based (`[i - 1]` is part `i`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutPartAnalysis {
    pub t: usize,
    pub x_parts: Vec<Vec<usize>>,
    pub y_parts: Vec<Vec<usize>>,
    /// Cut edges inside each part.
    pub internal: Vec<Vec<(usize, usize)>>,
    /// Cut edges between parts `i < j`, as `(i, j, edges)`.
    pub cross: Vec<(usize, usize, Vec<(usize, usize)>)>,
    /// Parts meeting X.
    pub j: Vec<usize>,
    /// Parts meeting both X and Y.
    pub j_prime: Vec<usize>,
    /// Parts meeting Y.
    pub t_set: Vec<usize>,
}

impl CutPartAnalysis {
    pub fn new(g: &StarGraph, view: &DecompositionView, witness: &CutWitness) -> Result<Self> {
        let n = view.part_count();
        let mut inside = vec![false; g.vertex_count()];
        witness.x.iter().for_each(|&v| inside[v] = true);

        let mut x_parts = vec![Vec::new(); n];
        let mut y_parts = vec![Vec::new(); n];
        for v in 0..g.vertex_count() {
            let side = if inside[v] { &mut x_parts } else { &mut y_parts };
            side[view.part_of(v) - 1].push(v);
        }
        let mut internal = vec![Vec::new(); n];
        let mut cross: Vec<(usize, usize, Vec<(usize, usize)>)> = Vec::new();
        for &(u, v) in &witness.b {
            let (a, b) = (view.part_of(u), view.part_of(v));
            if a == b {
                internal[a - 1].push((u, v));
                continue;
            }
            let key = (a.min(b), a.max(b));
            match cross.iter_mut().find(|c| (c.0, c.1) == key) {
                Some(entry) => entry.2.push((u, v)),
                None => cross.push((key.0, key.1, vec![(u, v)])),
            }
        }
        cross.sort_by_key(|c| (c.0, c.1));
        let j: Vec<usize> = (1..=n).filter(|&i| !x_parts[i - 1].is_empty()).collect();
        let t_set: Vec<usize> = (1..=n).filter(|&i| !y_parts[i - 1].is_empty()).collect();
        let j_prime = j.iter().copied().filter(|i| t_set.contains(i)).collect();
        Ok(Self { t: view.t(), x_parts, y_parts, internal, cross, j, j_prime, t_set })
    }

    /// The X_i and Y_i partition the two sides and the B_i, B_ij partition B.
    pub fn is_partition_of(&self, g: &StarGraph, witness: &CutWitness) -> bool {
        let xs: usize = self.x_parts.iter().map(Vec::len).sum();
        let ys: usize = self.y_parts.iter().map(Vec::len).sum();
        let mut edges: Vec<(usize, usize)> = self.internal.iter().flatten().copied().collect();
        edges.extend(self.cross.iter().flat_map(|c| c.2.iter().copied()));
        edges.sort_unstable();
        xs == witness.x.len() && xs + ys == g.vertex_count() && edges == witness.b
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartVerdict {
    pub part: usize,
    pub internal_cut_edges: usize,
    pub components: usize,
    pub min_degree: usize,
    /// `B_i` is an (h-1)-edge-cut of the part, checked on `S(n-1,k-1)`.
    pub valid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma28Report {
    pub n: usize,
    pub k: usize,
    pub h: usize,
    pub t: usize,
    pub cut_size: usize,
    pub witness_valid: bool,
    pub j: Vec<usize>,
    pub j_prime: Vec<usize>,
    pub t_set: Vec<usize>,
    pub parts: Vec<PartVerdict>,
    pub partition_ok: bool,
    /// `|B| >= Σ_{i∈J'} |B_i|`.
    pub accounting_ok: bool,
    /// Closed-form `λ_s^(h-1)(S(n-1,k-1))`, when `k-1 >= 2`.
    pub part_formula_value: Option<u64>,
    /// `|B| >= |J'| · part_formula_value`.
    pub lower_bound_ok: Option<bool>,
    pub passed: bool,
}

/// Checks, for every part meeting both sides of `witness`, that the cut
/// edges inside the part form an (h-1)-edge-cut of that copy of
/// `S(n-1,k-1)`, plus the edge accounting across parts.
pub fn lemma28_check_witness(g: &StarGraph, witness: &CutWitness, t: usize) -> Result<Lemma28Report> {
    let (n, k, h) = (g.n(), g.k(), witness.h);
    if k < 3 {
        return Err(Error::TheoremRange(format!("3 <= k violated: k = {k}")));
    }
    if h < 1 || h > n - k {
        return Err(Error::TheoremRange(format!("1 <= h <= n-k violated: h = {h}, n-k = {}", n - k)));
    }
    let view = decompose(g, t)?;
    let analysis = CutPartAnalysis::new(g, &view, witness)?;
    let mut parts = Vec::with_capacity(analysis.j_prime.len());
    for &i in &analysis.j_prime {
        let emb = part_as_star(g, &view, i)?;
        let mapped: Vec<(usize, usize)> = analysis.internal[i - 1]
            .iter()
            .map(|&(u, v)| (emb.to_part(u).expect("in part"), emb.to_part(v).expect("in part")))
            .collect();
        let report = verify_h_edge_cut(emb.graph.topology(), &mapped, h - 1)?;
        parts.push(PartVerdict {
            part: i,
            internal_cut_edges: mapped.len(),
            components: report.components,
            min_degree: report.min_degree,
            valid: report.valid,
        });
    }
    let inside: usize = parts.iter().map(|p| p.internal_cut_edges).sum();
    let accounting_ok = witness.value() >= inside;
    let part_formula_value = (k >= 3)
        .then(|| formula::evaluate(n as u64 - 1, k as u64 - 1, h as u64 - 1).ok())
        .flatten()
        .map(|f| f.theorem_value);
    let lower_bound_ok =
        part_formula_value.map(|v| witness.value() as u64 >= analysis.j_prime.len() as u64 * v);
    let partition_ok = analysis.is_partition_of(g, witness);
    let passed = partition_ok && accounting_ok && parts.iter().all(|p| p.valid);
    Ok(Lemma28Report {
        n,
        k,
        h,
        t,
        cut_size: witness.value(),
        witness_valid: witness.valid,
        j: analysis.j,
        j_prime: analysis.j_prime,
        t_set: analysis.t_set,
        parts,
        partition_ok,
        accounting_ok,
        part_formula_value,
        lower_bound_ok,
        passed,
    })
}

/// Solves for an optimal h-edge-cut of `S(n,k)` and checks it part by part.
pub fn lemma28_check(
    n: usize,
    k: usize,
    h: usize,
    t: usize,
    budget: &SearchBudget,
    threads: usize,
) -> Result<Lemma28Report> {
    formula::check_range(n as u64, k as u64, h as u64)?;
    if k < 3 || h < 1 {
        return Err(Error::TheoremRange(format!("need 3 <= k and 1 <= h, got k = {k}, h = {h}")));
    }
    let g = StarGraph::build(GraphSpec::new(n, k)?)?;
    let result = lambda_h_exact(&g, h, budget, threads)?;
    let witness = result
        .witness
        .ok_or_else(|| Error::Parameter(format!("no {h}-edge-cut found in S({n},{k})")))?;
    lemma28_check_witness(&g, &witness, t)
}

// ------------------------------------------------------------ fault trial

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaultTrialReport {
    pub n: usize,
    pub k: usize,
    pub h: usize,
    pub seed: u64,
    pub theorem_value: u64,
    /// Edges removed per sample: `theorem_value - 1`.
    pub removed: usize,
    pub trials: usize,
    /// Samples whose survivor graph kept minimum degree `>= h`.
    pub qualifying: usize,
    /// Qualifying samples that disconnected the graph.
    pub disconnections: usize,
    /// Whether removing the boundary of a clique cut of exactly
    /// `theorem_value` edges disconnects the graph.
    pub planted_disconnects: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaultCounts {
    pub qualifying: usize,
    pub disconnections: usize,
}

/// Removes `removed` uniformly chosen edges per trial and counts how often
/// the survivor graph keeps minimum degree `>= h`, and how many of those
/// are disconnected.
pub fn sample_faults(g: &SimpleGraph, h: usize, removed: usize, trials: usize, rng: &mut ChaCha8Rng) -> FaultCounts {
    let edges = g.edges();
    let removed = removed.min(edges.len());
    let mut counts = FaultCounts { qualifying: 0, disconnections: 0 };
    let mut degree = vec![0usize; g.vertex_count()];
    for _ in 0..trials {
        let picked: BTreeSet<(usize, usize)> =
            sample(rng, edges.len(), removed).into_iter().map(|i| edges[i]).collect();
        degree.iter_mut().enumerate().for_each(|(v, d)| *d = g.degree(v));
        for &(u, v) in &picked {
            degree[u] -= 1;
            degree[v] -= 1;
        }
        if degree.iter().any(|&d| d < h) {
            continue;
        }
        counts.qualifying += 1;
        let (_, comps) = g.components_without(|u, v| picked.contains(&(u.min(v), u.max(v))));
        if comps > 1 {
            counts.disconnections += 1;
        }
    }
    counts
}

pub fn fault_trial(n: usize, k: usize, h: usize, trials: usize, seed: u64) -> Result<FaultTrialReport> {
    let f = formula::evaluate(n as u64, k as u64, h as u64)?;
    if trials == 0 {
        return Err(Error::Parameter("trials must be >= 1".into()));
    }
    let g = StarGraph::build(GraphSpec::new(n, k)?)?;
    let removed = f.theorem_value as usize - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let counts = sample_faults(g.topology(), h, removed, trials, &mut rng);
    let planted = theorem_cut(&g, h, &default_alpha(&g)?)?;
    let planted_report = verify_h_edge_cut(g.topology(), &planted.witness.b, h)?;
    Ok(FaultTrialReport {
        n,
        k,
        h,
        seed,
        theorem_value: f.theorem_value,
        removed,
        trials,
        qualifying: counts.qualifying,
        disconnections: counts.disconnections,
        planted_disconnects: planted_report.components > 1,
    })
}

// ----------------------------------------------------------------- export

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
    CsvEdges,
}

impl std::str::FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(Self::Dot),
            "json" => Ok(Self::Json),
            "csv-edges" => Ok(Self::CsvEdges),
            other => Err(Error::Parameter(format!("unknown export format {other:?}"))),
        }
    }
}

pub fn export(g: &StarGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => io::to_dot(g),
        ExportFormat::Json => io::to_json(g),
        ExportFormat::CsvEdges => io::to_csv_edges(g),
    }
}
