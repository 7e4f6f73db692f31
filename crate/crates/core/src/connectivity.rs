//! Edge-disjoint Berge paths via unit-capacity max flow.
//!
//! The network has one node per vertex and an in/out node pair per edge. A
//! vertex connects to the in-node of every edge containing it, the out-node of
//! every edge connects back to each member, and the in-to-out arc carries
//! capacity 1. Walks in the flow decomposition therefore use each edge of the
//! hypergraph at most once, and cutting out repeated nodes turns them into
//! paths on a subset of their edges.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Alternating vertex/edge sequence `v_1, E_1, v_2, ..., E_r, v_{r+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergePath {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl BergePath {
    /// Distinct vertices, distinct edges, and consecutive vertices in the joining edge.
    pub fn is_valid_in(&self, h: &Hypergraph) -> bool {
        let distinct = |xs: &[usize]| {
            let mut s = xs.to_vec();
            s.sort_unstable();
            s.windows(2).all(|w| w[0] != w[1])
        };
        self.vertices.len() == self.edges.len() + 1
            && distinct(&self.vertices)
            && distinct(&self.edges)
            && self.edges.iter().enumerate().all(|(i, &e)| {
                e < h.m()
                    && h.edge(e).binary_search(&self.vertices[i]).is_ok()
                    && h.edge(e).binary_search(&self.vertices[i + 1]).is_ok()
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathFamily {
    pub count: usize,
    pub paths: Vec<BergePath>,
}

struct Arc {
    to: usize,
    cap: usize,
}

struct Network {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Self { arcs: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    fn add(&mut self, from: usize, to: usize, cap: usize) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    fn levels(&self, s: usize) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.out.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let y = self.arcs[a].to;
                if self.arcs[a].cap > 0 && level[y] == usize::MAX {
                    level[y] = level[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        level
    }

    fn augment(&mut self, x: usize, t: usize, limit: usize, level: &[usize], next: &mut [usize]) -> usize {
        if x == t {
            return limit;
        }
        while next[x] < self.out[x].len() {
            let a = self.out[x][next[x]];
            let y = self.arcs[a].to;
            if self.arcs[a].cap > 0 && level[y] == level[x] + 1 {
                let pushed = self.augment(y, t, limit.min(self.arcs[a].cap), level, next);
                if pushed > 0 {
                    self.arcs[a].cap -= pushed;
                    self.arcs[a ^ 1].cap += pushed;
                    return pushed;
                }
            }
            next[x] += 1;
        }
        0
    }

    /// Dinic's algorithm; arcs are scanned in insertion order.
    fn max_flow(&mut self, s: usize, t: usize) -> usize {
        let mut total = 0;
        loop {
            let level = self.levels(s);
            if level[t] == usize::MAX {
                return total;
            }
            let mut next = vec![0; self.out.len()];
            loop {
                let pushed = self.augment(s, t, usize::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }
}

/// Maximum number of pairwise edge-disjoint Berge paths between `u` and `v`,
/// with one witness family.
pub fn max_edge_disjoint_paths(h: &Hypergraph, u: usize, v: usize) -> Result<PathFamily> {
    h.degree(u)?;
    h.degree(v)?;
    if u == v {
        return Err(Error::SameVertex);
    }
    let (n, m) = (h.n(), h.m());
    let edge_in = |e: usize| n + e;
    let edge_out = |e: usize| n + m + e;
    let inf = m + 1;

    let mut net = Network::new(n + 2 * m);
    let mut original = Vec::new();
    for (e, members) in h.edges().iter().enumerate() {
        original.push((net.arcs.len(), 1));
        net.add(edge_in(e), edge_out(e), 1);
        for &x in members {
            original.push((net.arcs.len(), inf));
            net.add(x, edge_in(e), inf);
            original.push((net.arcs.len(), inf));
            net.add(edge_out(e), x, inf);
        }
    }
    let count = net.max_flow(u, v);

    let mut flow = vec![0; net.arcs.len()];
    for &(a, cap) in &original {
        flow[a] = cap - net.arcs[a].cap;
    }
    let mut paths = Vec::with_capacity(count);
    for _ in 0..count {
        paths.push(extract_path(&net, &mut flow, u, v, n, m));
    }
    Ok(PathFamily { count, paths })
}

/// Follows flow from `s` to `t`, consuming it and discarding any cycle closed on the way.
fn extract_path(net: &Network, flow: &mut [usize], s: usize, t: usize, n: usize, m: usize) -> BergePath {
    let mut on_path = vec![usize::MAX; net.out.len()];
    let mut nodes = vec![s];
    on_path[s] = 0;
    while *nodes.last().unwrap() != t {
        let x = *nodes.last().unwrap();
        let a = *net.out[x]
            .iter()
            .find(|&&a| a % 2 == 0 && flow[a] > 0)
            .expect("flow conservation leaves an outgoing unit");
        flow[a] -= 1;
        let y = net.arcs[a].to;
        if on_path[y] != usize::MAX {
            for z in nodes.drain(on_path[y] + 1..) {
                on_path[z] = usize::MAX;
            }
        } else {
            on_path[y] = nodes.len();
            nodes.push(y);
        }
    }
    let vertices = nodes.iter().copied().filter(|&x| x < n).collect();
    let edges = nodes.iter().copied().filter(|&x| x >= n && x < n + m).map(|x| x - n).collect();
    BergePath { vertices, edges }
}

pub fn is_t_connected(h: &Hypergraph, u: usize, v: usize, t: usize) -> Result<bool> {
    Ok(max_edge_disjoint_paths(h, u, v)?.count >= t)
}
