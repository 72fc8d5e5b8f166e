//! Classical edge connectivity by unit-capacity max-flow.

use std::collections::VecDeque;

use crate::graph::SimpleGraph;

struct Residual {
    head: Vec<usize>,
    cap: Vec<u32>,
    // arcs leaving each vertex
    out: Vec<Vec<usize>>,
}

impl Residual {
    fn new(g: &SimpleGraph) -> Self {
        let mut r = Residual { head: Vec::new(), cap: Vec::new(), out: vec![Vec::new(); g.vertex_count()] };
        for (u, v) in g.edges() {
            // arc 2e is u->v, arc 2e+1 is v->u; each is the other's reverse
            r.out[u].push(r.head.len());
            r.head.push(v);
            r.cap.push(1);
            r.out[v].push(r.head.len());
            r.head.push(u);
            r.cap.push(1);
        }
        r
    }

    fn reset(&mut self) {
        self.cap.iter_mut().for_each(|c| *c = 1);
    }

    /// Max-flow from `s` to `t`, stopping once it reaches `limit`.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut via = vec![usize::MAX; self.out.len()];
        while flow < limit {
            via.iter_mut().for_each(|a| *a = usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            while let Some(u) = queue.pop_front() {
                for &a in &self.out[u] {
                    let w = self.head[a];
                    if self.cap[a] > 0 && w != s && via[w] == usize::MAX {
                        via[w] = a;
                        if w == t {
                            reached = true;
                            break;
                        }
                        queue.push_back(w);
                    }
                }
                if reached {
                    break;
                }
            }
            if !reached {
                break;
            }
            let mut w = t;
            while w != s {
                let a = via[w];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                w = self.head[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// `λ(g)`: the minimum over `t != 0` of the max-flow from vertex 0 to `t`.
/// Disconnected graphs, and graphs with fewer than two vertices, give 0.
pub fn edge_connectivity(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    if n < 2 || !g.is_connected() {
        return 0;
    }
    let mut residual = Residual::new(g);
    let mut best = g.min_degree();
    for t in 1..n {
        residual.reset();
        best = best.min(residual.max_flow(0, t, best));
    }
    best
}
