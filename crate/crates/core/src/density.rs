//! Exact maximum average degree and pseudoarboricity.
//!
//! Mad is found by bisecting on a density guess `g` over the edge/vertex
//! flow network (source → edge node, capacity 1; edge node → endpoints,
//! unbounded; vertex → sink, capacity `g`). Some subgraph has
//! |E(H)|/|V(H)| > g exactly when the max flow falls short of |E|. All
//! capacities are scaled by the denominator of `g`, so flows stay integral.

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::flow::{EdgeVertexLayout, FlowNetwork, INF};
use crate::graph::Graph;
use crate::orientation::k_orientation;

/// Exact rational in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub fn new(numerator: i64, denominator: i64) -> Self {
        Rational(Ratio::new(numerator, denominator))
    }

    pub fn integer(value: i64) -> Self {
        Rational(Ratio::from_integer(value))
    }

    pub fn numerator(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> i64 {
        *self.0.denom()
    }

    pub fn ceil(&self) -> i64 {
        self.0.ceil().to_integer()
    }

    fn ratio(self) -> Ratio<i64> {
        self.0
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityReport {
    pub mad: Rational,
    /// Sorted vertex set whose induced subgraph attains `mad`.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DensityError {
    #[error("graph has no edges")]
    EmptyEdgeSet,
}

struct DensityProbe {
    /// Some subgraph has density strictly above the guess.
    denser_exists: bool,
    source_side: Vec<usize>,
}

fn probe(graph: &Graph, guess: Ratio<i128>) -> DensityProbe {
    let layout = EdgeVertexLayout {
        m: graph.m(),
        n: graph.n(),
    };
    let scale = *guess.denom();
    let mut net = FlowNetwork::new(layout.nodes());
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        net.add_arc(layout.source(), layout.edge_node(e), scale);
        net.add_arc(layout.edge_node(e), layout.vertex_node(u), INF);
        net.add_arc(layout.edge_node(e), layout.vertex_node(v), INF);
    }
    for v in 0..graph.n() {
        net.add_arc(layout.vertex_node(v), layout.sink(), *guess.numer());
    }
    let flow = net.max_flow(layout.source(), layout.sink());
    let denser_exists = flow < graph.m() as i128 * scale;
    let side = net.source_side(layout.source());
    DensityProbe {
        denser_exists,
        source_side: (0..graph.n())
            .filter(|&v| side[layout.vertex_node(v)])
            .collect(),
    }
}

/// Exact Mad(G) with an induced subgraph attaining it.
pub fn mad_exact(graph: &Graph) -> Result<DensityReport, DensityError> {
    let m = graph.m() as i128;
    if m == 0 {
        return Err(DensityError::EmptyEdgeSet);
    }
    let n = graph.n() as i128;

    // Invariant: a subgraph denser than `lo` exists, none denser than `hi`.
    let mut lo = Ratio::from_integer(0);
    let mut hi = Ratio::from_integer(m);
    let mut lo_side = probe(graph, lo).source_side;
    // Distinct fractions with denominators ≤ n are at least 1/(n(n-1)) apart.
    let width = Ratio::new(1, (n * (n - 1) * (n - 1)).max(2));
    let two = Ratio::from_integer(2);
    while hi - lo >= width {
        let mid = (lo + hi) / two;
        let p = probe(graph, mid);
        if p.denser_exists {
            lo = mid;
            lo_side = p.source_side;
        } else {
            hi = mid;
        }
    }

    // The maximum edge density lies in (lo, hi]; only one candidate fits.
    let density = (1..=n)
        .map(|b| {
            let a = (hi * Ratio::from_integer(b)).floor();
            a / Ratio::from_integer(b)
        })
        .find(|&c| c > lo && c <= hi)
        .expect("bisection interval holds a fraction with denominator at most n");

    debug_assert_eq!(
        Ratio::new(graph.induced_edge_count(&lo_side) as i128, lo_side.len() as i128),
        density
    );
    let mad = density * two;
    Ok(DensityReport {
        mad: Rational::new(*mad.numer() as i64, *mad.denom() as i64),
        witness: lo_side,
    })
}

/// Smallest k for which a k-orientation exists; equals ⌈Mad/2⌉.
pub fn pseudoarboricity(graph: &Graph) -> usize {
    if graph.m() == 0 {
        return 0;
    }
    // feasible at max degree, infeasible at 0
    let (mut lo, mut hi) = (0, graph.max_degree());
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if k_orientation(graph, mid).is_ok() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

impl DensityReport {
    /// Recounts 2|E(G[witness])| / |witness| directly.
    pub fn witness_density(&self, graph: &Graph) -> Rational {
        Rational::new(
            2 * graph.induced_edge_count(&self.witness) as i64,
            self.witness.len() as i64,
        )
    }

    /// Whether Mad(G) ≤ 2k.
    pub fn at_most_twice(&self, k: usize) -> bool {
        self.mad.ratio() <= Ratio::from_integer(2 * k as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q3() -> Graph {
        let edges = (0..8usize)
            .flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b))))
            .filter(|&(u, v)| u < v);
        Graph::from_edges(8, edges, true).unwrap()
    }

    #[test]
    fn single_edge() {
        let g = Graph::parse("2 1\n0 1\n").unwrap();
        let r = mad_exact(&g).unwrap();
        // 2 * 1 edge / 2 vertices
        assert_eq!(r.mad, Rational::integer(1));
        assert_eq!(r.witness, vec![0, 1]);
    }

    #[test]
    fn cube() {
        // 2^8-subset enumeration gives 3 (whole cube, 12 edges / 8 vertices)
        let r = mad_exact(&q3()).unwrap();
        assert_eq!(r.mad, Rational::integer(3));
        assert_eq!(r.witness, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn k23() {
        let g = Graph::from_edges(5, (0..2).flat_map(|a| (2..5).map(move |b| (a, b))), true)
            .unwrap();
        let r = mad_exact(&g).unwrap();
        assert_eq!(r.mad, Rational::new(12, 5));
        assert_eq!(r.witness, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn empty_edge_set() {
        let g = Graph::empty(3, false);
        assert_eq!(mad_exact(&g), Err(DensityError::EmptyEdgeSet));
        assert_eq!(pseudoarboricity(&g), 0);
    }

    #[test]
    fn dense_part_wins_over_sparse_tail() {
        // K4 (Mad 3) with a long path attached
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend((3..9).map(|v| (v, v + 1)));
        let g = Graph::from_edges(10, edges, false).unwrap();
        let r = mad_exact(&g).unwrap();
        assert_eq!(r.mad, Rational::integer(3));
        assert_eq!(r.witness, vec![0, 1, 2, 3]);
        assert_eq!(r.witness_density(&g), r.mad);
    }

    #[test]
    fn pseudoarboricity_of_cube() {
        assert_eq!(pseudoarboricity(&q3()), 2);
    }

    #[test]
    fn rational_display() {
        assert_eq!(Rational::new(24, 10).to_string(), "12/5");
        assert_eq!(Rational::integer(3).to_string(), "3/1");
        assert_eq!(Rational::new(7, 2).ceil(), 4);
    }
}
