//! Orientations, the flow-based k-orientation test, the X-side switching
//! construction of proper (k+1)-orientations, and the independent verifier.

use std::fmt::Write as _;

use thiserror::Error;

use crate::flow::{EdgeVertexLayout, FlowNetwork};
use crate::graph::{bipartition, Bipartition, Graph, NotBipartite, Side};

/// Direction per edge index: `true` means the arc runs from the first-listed
/// endpoint to the second.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    direction: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("size mismatch: graph has {expected} edges, orientation has {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("line {line}: arc {tail} {head} does not match edge {edge} ({u} {v})")]
    ArcMismatch {
        line: usize,
        edge: usize,
        tail: usize,
        head: usize,
        u: usize,
        v: usize,
    },
    #[error("line {line}: malformed arc line")]
    MalformedArc { line: usize },
}

impl Orientation {
    pub fn from_directions(direction: Vec<bool>) -> Self {
        Orientation { direction }
    }

    /// Every edge oriented from its first-listed endpoint to the second.
    pub fn forward(graph: &Graph) -> Self {
        Orientation {
            direction: vec![true; graph.m()],
        }
    }

    /// Builds an orientation from `(tail, head)` pairs given in edge order.
    pub fn from_arcs(graph: &Graph, arcs: &[(usize, usize)]) -> Result<Self, OrientationError> {
        if arcs.len() != graph.m() {
            return Err(OrientationError::SizeMismatch {
                expected: graph.m(),
                found: arcs.len(),
            });
        }
        let mut direction = Vec::with_capacity(arcs.len());
        for (idx, (&(tail, head), &(u, v))) in arcs.iter().zip(graph.edges()).enumerate() {
            if (tail, head) == (u, v) {
                direction.push(true);
            } else if (tail, head) == (v, u) {
                direction.push(false);
            } else {
                return Err(OrientationError::ArcMismatch {
                    line: idx + 1,
                    edge: idx,
                    tail,
                    head,
                    u,
                    v,
                });
            }
        }
        Ok(Orientation { direction })
    }

    /// Reads an orientation file: one `tail head` line per edge, in edge
    /// order. A leading `n m [planar]` header line is tolerated when the
    /// file holds exactly one line more than the graph has edges.
    pub fn parse(graph: &Graph, text: &str) -> Result<Self, OrientationError> {
        let mut lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        if lines.len() == graph.m() + 1 {
            lines.remove(0);
        }
        let mut arcs = Vec::with_capacity(lines.len());
        for (line, content) in &lines {
            let nums: Vec<usize> = content
                .split_whitespace()
                .map(|t| t.parse())
                .collect::<Result<_, _>>()
                .map_err(|_| OrientationError::MalformedArc { line: *line })?;
            if nums.len() != 2 {
                return Err(OrientationError::MalformedArc { line: *line });
            }
            arcs.push((nums[0], nums[1]));
        }
        Orientation::from_arcs(graph, &arcs).map_err(|e| match e {
            OrientationError::ArcMismatch {
                line: idx,
                edge,
                tail,
                head,
                u,
                v,
            } => OrientationError::ArcMismatch {
                line: lines[idx - 1].0,
                edge,
                tail,
                head,
                u,
                v,
            },
            other => other,
        })
    }

    pub fn len(&self) -> usize {
        self.direction.len()
    }

    pub fn is_empty(&self) -> bool {
        self.direction.is_empty()
    }

    pub fn directions(&self) -> &[bool] {
        &self.direction
    }

    pub fn is_forward(&self, edge: usize) -> bool {
        self.direction[edge]
    }

    pub fn flip(&mut self, edge: usize) {
        self.direction[edge] = !self.direction[edge];
    }

    /// `(tail, head)` of edge `edge`.
    pub fn arc(&self, graph: &Graph, edge: usize) -> (usize, usize) {
        let (u, v) = graph.edge(edge);
        if self.direction[edge] {
            (u, v)
        } else {
            (v, u)
        }
    }

    pub fn head(&self, graph: &Graph, edge: usize) -> usize {
        self.arc(graph, edge).1
    }

    pub fn tail(&self, graph: &Graph, edge: usize) -> usize {
        self.arc(graph, edge).0
    }

    /// All arcs in edge order.
    pub fn arcs(&self, graph: &Graph) -> Vec<(usize, usize)> {
        (0..self.direction.len())
            .map(|e| self.arc(graph, e))
            .collect()
    }

    pub fn indegrees(&self, graph: &Graph) -> Vec<usize> {
        let mut indeg = vec![0; graph.n()];
        for e in 0..self.direction.len() {
            indeg[self.head(graph, e)] += 1;
        }
        indeg
    }

    /// The orientation file format: one `tail head` line per edge.
    pub fn to_arc_lines(&self, graph: &Graph) -> String {
        let mut out = String::new();
        for (t, h) in self.arcs(graph) {
            let _ = writeln!(out, "{t} {h}");
        }
        out
    }

    /// An edge-list document whose edge lines are the arcs. It parses back
    /// to a graph with the same edge set and order.
    pub fn to_oriented_document(&self, graph: &Graph) -> String {
        let mut out = format!("{} {}", graph.n(), graph.m());
        if graph.planar_asserted() {
            out.push_str(" planar");
        }
        out.push('\n');
        out.push_str(&self.to_arc_lines(graph));
        out
    }
}

/// Result of recounting an orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationReport {
    pub indegrees: Vec<usize>,
    pub max_indegree: usize,
    pub proper: bool,
    /// Edge indices whose endpoints have equal indegree.
    pub violations: Vec<usize>,
}

/// Recounts indegrees from scratch and checks properness. This is the
/// checker every certificate in the crate is validated against.
pub fn verify_orientation(
    graph: &Graph,
    orientation: &Orientation,
) -> Result<OrientationReport, OrientationError> {
    if orientation.len() != graph.m() {
        return Err(OrientationError::SizeMismatch {
            expected: graph.m(),
            found: orientation.len(),
        });
    }
    let mut indegrees = vec![0usize; graph.n()];
    for (idx, &(u, v)) in graph.edges().iter().enumerate() {
        if orientation.directions()[idx] {
            indegrees[v] += 1;
        } else {
            indegrees[u] += 1;
        }
    }
    let violations: Vec<usize> = graph
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| indegrees[u] == indegrees[v])
        .map(|(i, _)| i)
        .collect();
    Ok(OrientationReport {
        max_indegree: indegrees.iter().copied().max().unwrap_or(0),
        proper: violations.is_empty(),
        indegrees,
        violations,
    })
}

/// No k-orientation exists; `witness` induces more than `k * |witness|` edges.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("infeasible: no {k}-orientation ({induced_edges} edges inside {} vertices)", .witness.len())]
pub struct Infeasible {
    pub k: usize,
    pub witness: Vec<usize>,
    pub induced_edges: usize,
}

/// Finds an orientation with every indegree at most `k`, or a dense vertex
/// set proving none exists.
///
/// Network: source → edge node (1) → both endpoints (1) → sink (`k`). An
/// edge's unit of flow lands on its head.
pub fn k_orientation(graph: &Graph, k: usize) -> Result<Orientation, Infeasible> {
    let layout = EdgeVertexLayout {
        m: graph.m(),
        n: graph.n(),
    };
    let mut net = FlowNetwork::new(layout.nodes());
    let mut to_second = Vec::with_capacity(graph.m());
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        net.add_arc(layout.source(), layout.edge_node(e), 1);
        net.add_arc(layout.edge_node(e), layout.vertex_node(u), 1);
        to_second.push(net.add_arc(layout.edge_node(e), layout.vertex_node(v), 1));
    }
    for v in 0..graph.n() {
        net.add_arc(layout.vertex_node(v), layout.sink(), k as i128);
    }
    let flow = net.max_flow(layout.source(), layout.sink());
    if flow == graph.m() as i128 {
        let direction = to_second.iter().map(|&a| net.flow(a) == 1).collect();
        return Ok(Orientation { direction });
    }
    let side = net.source_side(layout.source());
    let witness: Vec<usize> = (0..graph.n())
        .filter(|&v| side[layout.vertex_node(v)])
        .collect();
    let induced_edges = graph.induced_edge_count(&witness);
    debug_assert!(induced_edges > k * witness.len());
    Err(Infeasible {
        k,
        witness,
        induced_edges,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProperError {
    #[error("k must be at least 1")]
    BadK,
    #[error("bipartition does not match the graph")]
    InvalidBipartition,
    #[error("precondition failed: vertex {vertex} in X has degree {degree} < k + 1 = {}", .k + 1)]
    PreconditionDegree { vertex: usize, degree: usize, k: usize },
    #[error("precondition failed: Mad exceeds 2k ({0})")]
    PreconditionMad(Infeasible),
}

/// Proper (k+1)-orientation of a bipartite graph whose `x_side` class has
/// all degrees at least k+1 and which admits a k-orientation.
///
/// Starting from any k-orientation, each x in X gets exactly
/// `(k+1) - indeg(x)` of its outgoing arcs reversed, lowest edge index
/// first. X then sits at indegree k+1 while Y only loses indegree.
pub fn proper_bipartite_orientation(
    graph: &Graph,
    part: &Bipartition,
    x_side: Side,
    k: usize,
) -> Result<Orientation, ProperError> {
    if k == 0 {
        return Err(ProperError::BadK);
    }
    if !part.is_valid_for(graph) {
        return Err(ProperError::InvalidBipartition);
    }
    let x_class = part.class(x_side);
    if let Some(&vertex) = x_class.iter().find(|&&x| graph.degree(x) < k + 1) {
        return Err(ProperError::PreconditionDegree {
            vertex,
            degree: graph.degree(vertex),
            k,
        });
    }
    let mut orientation = k_orientation(graph, k).map_err(ProperError::PreconditionMad)?;
    let mut indeg = orientation.indegrees(graph);
    for x in x_class {
        let mut missing = k + 1 - indeg[x];
        for &(_, e) in graph.adjacency(x) {
            if missing == 0 {
                break;
            }
            if orientation.tail(graph, e) == x {
                orientation.flip(e);
                missing -= 1;
            }
        }
        indeg[x] = k + 1;
    }
    Ok(orientation)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Proper3Error {
    #[error(transparent)]
    NotBipartite(#[from] NotBipartite),
    #[error("minimum degree {0} is below 3")]
    MinDegreeTooSmall(usize),
    #[error("planarity not asserted")]
    PlanarityNotAsserted,
    #[error("edge bound violated: {m} edges > 2n - 4 = {bound}; planarity assertion is false")]
    EdgeBoundViolated { m: usize, bound: usize },
    #[error(transparent)]
    Proper(#[from] ProperError),
}

/// Proper 3-orientation of a planar bipartite graph with minimum degree 3.
/// X is the class of vertex 0 (of each component's smallest vertex).
pub fn proper_three_orientation(graph: &Graph) -> Result<Orientation, Proper3Error> {
    let part = bipartition(graph)?;
    let delta = graph.min_degree();
    if delta < 3 {
        return Err(Proper3Error::MinDegreeTooSmall(delta));
    }
    if !graph.planar_asserted() {
        return Err(Proper3Error::PlanarityNotAsserted);
    }
    // δ ≥ 3 in a bipartite graph forces n ≥ 6
    let bound = 2 * graph.n() - 4;
    if graph.m() > bound {
        return Err(Proper3Error::EdgeBoundViolated { m: graph.m(), bound });
    }
    Ok(proper_bipartite_orientation(graph, &part, Side::X, 2)?)
}
