//! Dinic max flow on integer capacities.

use std::collections::VecDeque;

pub(crate) const INF: i128 = i128::MAX / 4;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i128,
}

/// Residual network. Arc `2i` is the i-th added arc, `2i + 1` its reverse.
#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    level: Vec<i32>,
    cursor: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            cursor: vec![0; nodes],
        }
    }

    /// Adds `from -> to` with capacity `cap`; returns the arc handle.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i128) -> usize {
        debug_assert!(cap >= 0);
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap });
        self.arcs.push(Arc { to: from, cap: 0 });
        self.out[from].push(id);
        self.out[to].push(id + 1);
        id
    }

    /// Flow currently pushed along the arc returned by [`add_arc`].
    pub fn flow(&self, arc: usize) -> i128 {
        self.arcs[arc ^ 1].cap
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.out[u] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && self.level[arc.to] < 0 {
                    self.level[arc.to] = self.level[u] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, limit: i128) -> i128 {
        if u == t {
            return limit;
        }
        while self.cursor[u] < self.out[u].len() {
            let a = self.out[u][self.cursor[u]];
            let (to, cap) = (self.arcs[a].to, self.arcs[a].cap);
            if cap > 0 && self.level[to] == self.level[u] + 1 {
                let pushed = self.dfs(to, t, limit.min(cap));
                if pushed > 0 {
                    self.arcs[a].cap -= pushed;
                    self.arcs[a ^ 1].cap += pushed;
                    return pushed;
                }
            }
            self.cursor[u] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i128 {
        let mut total = 0;
        while self.bfs(s, t) {
            self.cursor.iter_mut().for_each(|c| *c = 0);
            loop {
                let pushed = self.dfs(s, t, INF);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    /// Nodes reachable from `s` in the residual network: the source side of
    /// a minimum cut once [`max_flow`] has run.
    pub fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.out[u] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    queue.push_back(arc.to);
                }
            }
        }
        seen
    }
}

/// Node layout shared by the orientation and density networks: source,
/// one node per edge, one node per vertex, sink.
#[derive(Debug, Clone, Copy)]
pub(crate) struct EdgeVertexLayout {
    pub m: usize,
    pub n: usize,
}

impl EdgeVertexLayout {
    pub fn source(&self) -> usize {
        0
    }
    pub fn edge_node(&self, e: usize) -> usize {
        1 + e
    }
    pub fn vertex_node(&self, v: usize) -> usize {
        1 + self.m + v
    }
    pub fn sink(&self) -> usize {
        1 + self.m + self.n
    }
    pub fn nodes(&self) -> usize {
        self.m + self.n + 2
    }
}
