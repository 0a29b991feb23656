//! Simple undirected graphs, the edge-list text format, bipartitions and
//! the planar bipartite edge bound.
//!
//! Vertices are dense integers `0..n`. Edge `i` is `edges()[i]` for the
//! lifetime of a [`Graph`]; orientations elsewhere in the crate refer to
//! edges by this index.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Errors raised while reading an edge-list document.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: malformed edge line: {reason}")]
    MalformedEdge { line: usize, reason: String },
    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("edge count mismatch: header declares {declared}, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
}

/// Errors raised when building a graph programmatically.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
}

/// An odd cycle, listed as a closed walk without repeating the first vertex.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not bipartite (odd cycle {})", format_cycle(.cycle))]
pub struct NotBipartite {
    pub cycle: Vec<usize>,
}

fn format_cycle(cycle: &[usize]) -> String {
    cycle
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("-")
}

/// Undirected simple graph with stable edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
    planar_asserted: bool,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        planar_asserted: bool,
    ) -> Result<Self, GraphError> {
        let mut graph = Graph::empty(n, planar_asserted);
        let mut seen = HashSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            graph.push_edge(u, v);
        }
        Ok(graph)
    }

    pub fn empty(n: usize, planar_asserted: bool) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
            planar_asserted,
        }
    }

    fn push_edge(&mut self, u: usize, v: usize) {
        let idx = self.edges.len();
        self.edges.push((u, v));
        self.adjacency[u].push((v, idx));
        self.adjacency[v].push((u, idx));
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> (usize, usize) {
        self.edges[idx]
    }

    /// `(neighbor, edge index)` pairs incident to `v`, in edge order.
    pub fn adjacency(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Minimum degree δ(G). Returns 0 for the graph with no vertices.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn planar_asserted(&self) -> bool {
        self.planar_asserted
    }

    pub fn with_planar_asserted(mut self, planar: bool) -> Self {
        self.planar_asserted = planar;
        self
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].iter().any(|&(w, _)| w == v)
    }

    /// Number of edges with both endpoints in `vertices`.
    pub fn induced_edge_count(&self, vertices: &[usize]) -> usize {
        let mut inside = vec![false; self.n];
        for &v in vertices {
            inside[v] = true;
        }
        self.edges
            .iter()
            .filter(|&&(u, v)| inside[u] && inside[v])
            .count()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Parses the edge-list format: a header `n m [planar]` followed by `m`
    /// lines `u v`. Blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) = lines.next().ok_or(ParseError::MalformedHeader {
            line: 1,
            reason: "empty document".into(),
        })?;
        let tokens: Vec<&str> = header.split_whitespace().collect();
        let bad_header = |reason: &str| ParseError::MalformedHeader {
            line: hline,
            reason: reason.into(),
        };
        if tokens.len() < 2 || tokens.len() > 3 {
            return Err(bad_header("expected `n m [planar]`"));
        }
        let n: usize = tokens[0]
            .parse()
            .map_err(|_| bad_header("vertex count is not a non-negative integer"))?;
        let m: usize = tokens[1]
            .parse()
            .map_err(|_| bad_header("edge count is not a non-negative integer"))?;
        let planar = match tokens.get(2) {
            None => false,
            Some(&"planar") => true,
            Some(other) => return Err(bad_header(&format!("unknown token `{other}`"))),
        };

        let mut graph = Graph::empty(n, planar);
        let mut seen = HashSet::new();
        let mut found = 0;
        for (line, content) in lines {
            found += 1;
            if found > m {
                continue;
            }
            let mut it = content.split_whitespace();
            let mut next_vertex = || -> Result<usize, ParseError> {
                let tok = it.next().ok_or_else(|| ParseError::MalformedEdge {
                    line,
                    reason: "expected `u v`".into(),
                })?;
                tok.parse().map_err(|_| ParseError::MalformedEdge {
                    line,
                    reason: format!("`{tok}` is not a vertex id"),
                })
            };
            let u = next_vertex()?;
            let v = next_vertex()?;
            if it.next().is_some() {
                return Err(ParseError::MalformedEdge {
                    line,
                    reason: "trailing tokens".into(),
                });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(ParseError::VertexOutOfRange { line, vertex: w, n });
                }
            }
            if u == v {
                return Err(ParseError::SelfLoop { line, vertex: u });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(ParseError::DuplicateEdge { line, u, v });
            }
            graph.push_edge(u, v);
        }
        if found != m {
            return Err(ParseError::EdgeCountMismatch { declared: m, found });
        }
        Ok(graph)
    }

    /// Renders the graph in the edge-list format, edges in stored order.
    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.n, self.edges.len())?;
        if self.planar_asserted {
            write!(f, " planar")?;
        }
        writeln!(f)?;
        for &(u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Graph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Graph::parse(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// Two-colouring of the vertices into classes X and Y.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    /// Puts exactly the listed vertices in X. Validity against a graph is
    /// checked separately with [`Bipartition::is_valid_for`].
    pub fn from_x_class(n: usize, x_class: &[usize]) -> Self {
        let mut side = vec![Side::Y; n];
        for &v in x_class {
            side[v] = Side::X;
        }
        Bipartition { side }
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn len(&self) -> usize {
        self.side.len()
    }

    pub fn is_empty(&self) -> bool {
        self.side.is_empty()
    }

    pub fn class(&self, which: Side) -> Vec<usize> {
        (0..self.side.len())
            .filter(|&v| self.side[v] == which)
            .collect()
    }

    /// The same partition with the class names exchanged.
    pub fn swapped(&self) -> Self {
        Bipartition {
            side: self.side.iter().map(|s| s.other()).collect(),
        }
    }

    pub fn is_valid_for(&self, graph: &Graph) -> bool {
        self.side.len() == graph.n()
            && graph
                .edges()
                .iter()
                .all(|&(u, v)| self.side[u] != self.side[v])
    }
}

/// Breadth-first two-colouring. In every component the smallest vertex is
/// put in X; on failure an odd cycle is returned.
pub fn bipartition(graph: &Graph) -> Result<Bipartition, NotBipartite> {
    let n = graph.n();
    let mut side: Vec<Option<Side>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for start in 0..n {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(Side::X);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for w in graph.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(su.other());
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => {
                        return Err(NotBipartite {
                            cycle: odd_cycle(&parent, &depth, u, w),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(Bipartition {
        side: side.into_iter().map(|s| s.unwrap()).collect(),
    })
}

// Closes the BFS-tree paths from `u` and `w` at their lowest common ancestor.
fn odd_cycle(parent: &[usize], depth: &[usize], u: usize, w: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut up_a = vec![a];
    let mut up_b = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        up_a.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        up_b.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        up_a.push(a);
        up_b.push(b);
    }
    // up_a ends at the ancestor; up_b repeats it.
    up_b.pop();
    let mut cycle: Vec<usize> = up_a.into_iter().rev().collect();
    cycle.extend(up_b);
    cycle
}

/// Where a planar bipartite graph sits relative to the bound |E| ≤ 2n − 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeBound {
    BelowBound,
    EqualityQuadrangulationCandidate,
    /// More than 2n − 4 edges: the planarity assertion cannot be true.
    ExceedsBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeBoundError {
    #[error("planarity not asserted")]
    PlanarityNotAsserted,
    #[error(transparent)]
    NotBipartite(#[from] NotBipartite),
    #[error("too small: n = {0} < 4")]
    TooSmall(usize),
}

pub fn euler_quadrangulation_check(graph: &Graph) -> Result<EdgeBound, EdgeBoundError> {
    if !graph.planar_asserted() {
        return Err(EdgeBoundError::PlanarityNotAsserted);
    }
    bipartition(graph)?;
    let n = graph.n();
    if n < 4 {
        return Err(EdgeBoundError::TooSmall(n));
    }
    let bound = 2 * n - 4;
    Ok(match graph.m().cmp(&bound) {
        std::cmp::Ordering::Less => EdgeBound::BelowBound,
        std::cmp::Ordering::Equal => EdgeBound::EqualityQuadrangulationCandidate,
        std::cmp::Ordering::Greater => EdgeBound::ExceedsBound,
    })
}
