//! Deterministic graph constructors.
//!
//! Vertex-id layouts:
//! - `q3`: vertex `b2 b1 b0` (binary) is id `4*b2 + 2*b1 + b0`.
//! - `pdw(m)`: rim `0..2m` in cyclic order, apex `2m` on even rim vertices,
//!   apex `2m+1` on odd ones.
//! - `theorem4(extra)`: see [`GadgetChainLayout`].
//! - `complete_bipartite(a, b)`: left `0..a`, right `a..a+b`.
//! - `path(n)`, `cycle(n)`: `0..n` in order.
//! - `star(n)`: centre `0`, leaves `1..=n` (so `star(3)` is K_{1,3}).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("bad parameters: {0}")]
    BadParams(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Q3,
    Pdw,
    Theorem4,
    CompleteBipartite,
    Path,
    Cycle,
    Star,
}

impl Family {
    fn arity(self) -> usize {
        match self {
            Family::Q3 => 0,
            Family::CompleteBipartite => 2,
            _ => 1,
        }
    }

    fn token(self) -> &'static str {
        match self {
            Family::Q3 => "q3",
            Family::Pdw => "pdw",
            Family::Theorem4 => "t4",
            Family::CompleteBipartite => "kbip",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
        }
    }
}

/// A family name plus its integer parameters, e.g. `pdw:5` or `kbip:2,3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>) -> Result<Self, GenError> {
        if params.len() != family.arity() {
            return Err(GenError::BadParams(format!(
                "{} takes {} parameter(s), got {}",
                family.token(),
                family.arity(),
                params.len()
            )));
        }
        Ok(FamilySpec { family, params })
    }
}

impl FromStr for FamilySpec {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, rest) = match s.split_once(':') {
            Some((name, rest)) => (name, Some(rest)),
            None => (s, None),
        };
        let family = match name {
            "q3" => Family::Q3,
            "pdw" => Family::Pdw,
            "t4" | "theorem4" => Family::Theorem4,
            "kbip" => Family::CompleteBipartite,
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "star" => Family::Star,
            other => return Err(GenError::BadParams(format!("unknown family `{other}`"))),
        };
        let params = match rest {
            None => Vec::new(),
            Some(rest) => rest
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse()
                        .map_err(|_| GenError::BadParams(format!("`{p}` is not a count")))
                })
                .collect::<Result<_, _>>()?,
        };
        FamilySpec::new(family, params)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family.token())?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
            write!(f, ":{}", ps.join(","))?;
        }
        Ok(())
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, GenError> {
    let p = &spec.params;
    match spec.family {
        Family::Q3 => Ok(q3()),
        Family::Pdw => pdw(p[0]),
        Family::Theorem4 => Ok(theorem4(p[0]).0),
        Family::CompleteBipartite => complete_bipartite(p[0], p[1]),
        Family::Path => path(p[0]),
        Family::Cycle => cycle(p[0]),
        Family::Star => star(p[0]),
    }
}

fn build(n: usize, edges: Vec<(usize, usize)>, planar: bool) -> Graph {
    Graph::from_edges(n, edges, planar).expect("generator produced a simple graph")
}

/// The 3-cube.
pub fn q3() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in [4, 2, 1] {
            let v = u ^ bit;
            if u < v {
                edges.push((u, v));
            }
        }
    }
    build(8, edges, true)
}

/// Pseudo-double wheel: a 2m-cycle plus one apex on the even rim vertices
/// and one on the odd ones. A quadrangulation with minimum degree 3.
pub fn pdw(m: usize) -> Result<Graph, GenError> {
    if m < 3 {
        return Err(GenError::BadParams(format!("pdw needs m >= 3, got {m}")));
    }
    let rim = 2 * m;
    let (even_apex, odd_apex) = (rim, rim + 1);
    let mut edges: Vec<(usize, usize)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    edges.extend((0..rim).step_by(2).map(|i| (i, even_apex)));
    edges.extend((1..rim).step_by(2).map(|i| (i, odd_apex)));
    Ok(build(rim + 2, edges, true))
}

/// K_{a,b}. Planarity is asserted only when one side has at most 2 vertices.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GenError> {
    if a == 0 || b == 0 {
        return Err(GenError::BadParams("kbip needs both sides non-empty".into()));
    }
    let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
    Ok(build(a + b, edges, a.min(b) <= 2))
}

pub fn path(n: usize) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::BadParams("path needs n >= 1".into()));
    }
    Ok(build(n, (1..n).map(|i| (i - 1, i)).collect(), true))
}

pub fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::BadParams(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n)).collect(), true))
}

/// K_{1,n} with centre 0.
pub fn star(n: usize) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::BadParams("star needs n >= 1 leaves".into()));
    }
    Ok(build(n + 1, (1..=n).map(|i| (0, i)).collect(), true))
}

/// Shape of the layered gadget graph: `hubs` pairs (p_i, q_i) joined to
/// s and t; under each hub pair, `pairs` pairs (b_ij, c_ij) each carrying
/// `a_size` common degree-2 neighbours a_ijk, plus `d_size` degree-2
/// vertices d_ik on p_i and q_i.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainShape {
    pub hubs: usize,
    pub pairs: usize,
    pub a_size: usize,
    pub d_size: usize,
}

impl ChainShape {
    /// The 182-vertex graph: 4 hub pairs, 4 b/c pairs each, 7 a's, 7 d's.
    pub const THEOREM4: ChainShape = ChainShape {
        hubs: 4,
        pairs: 4,
        a_size: 7,
        d_size: 7,
    };
}

/// Vertex class in a gadget-chain graph, with 0-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    A(usize, usize, usize),
    B(usize, usize),
    C(usize, usize),
    D(usize, usize),
    P(usize),
    Q(usize),
    S,
    T,
    ExtraA(usize),
}

/// Vertex ids of a gadget-chain graph. Indices below are 0-based
/// (`a(0, 0, 0)` is a_{111}). Blocks, in id order: all a_ijk (i, then j,
/// then k), all b_ij, all c_ij, all d_ik, all p_i, all q_i, s, t, then the
/// `extra` vertices a_{11,8}, a_{11,9}, ...
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetChainLayout {
    pub shape: ChainShape,
    pub extra: usize,
}

impl GadgetChainLayout {
    fn a_block(&self) -> usize {
        self.shape.hubs * self.shape.pairs * self.shape.a_size
    }
    fn bc_block(&self) -> usize {
        self.shape.hubs * self.shape.pairs
    }
    fn d_block(&self) -> usize {
        self.shape.hubs * self.shape.d_size
    }

    pub fn a(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.shape.pairs + j) * self.shape.a_size + k
    }
    pub fn b(&self, i: usize, j: usize) -> usize {
        self.a_block() + i * self.shape.pairs + j
    }
    pub fn c(&self, i: usize, j: usize) -> usize {
        self.a_block() + self.bc_block() + i * self.shape.pairs + j
    }
    pub fn d(&self, i: usize, k: usize) -> usize {
        self.a_block() + 2 * self.bc_block() + i * self.shape.d_size + k
    }
    pub fn p(&self, i: usize) -> usize {
        self.a_block() + 2 * self.bc_block() + self.d_block() + i
    }
    pub fn q(&self, i: usize) -> usize {
        self.p(0) + self.shape.hubs + i
    }
    pub fn s(&self) -> usize {
        self.q(0) + self.shape.hubs
    }
    pub fn t(&self) -> usize {
        self.s() + 1
    }
    /// The e-th extra degree-2 vertex on b_{11}, c_{11}.
    pub fn extra_a(&self, e: usize) -> usize {
        self.t() + 1 + e
    }
    pub fn n(&self) -> usize {
        self.t() + 1 + self.extra
    }

    /// Inverse of the id functions above (0-based indices).
    pub fn role(&self, v: usize) -> Option<Role> {
        let ChainShape {
            pairs,
            a_size,
            d_size,
            ..
        } = self.shape;
        if v < self.b(0, 0) {
            let (ij, k) = (v / a_size, v % a_size);
            return Some(Role::A(ij / pairs, ij % pairs, k));
        }
        if v < self.c(0, 0) {
            let ij = v - self.b(0, 0);
            return Some(Role::B(ij / pairs, ij % pairs));
        }
        if v < self.d(0, 0) {
            let ij = v - self.c(0, 0);
            return Some(Role::C(ij / pairs, ij % pairs));
        }
        if v < self.p(0) {
            let ik = v - self.d(0, 0);
            return Some(Role::D(ik / d_size, ik % d_size));
        }
        if v < self.q(0) {
            return Some(Role::P(v - self.p(0)));
        }
        if v < self.s() {
            return Some(Role::Q(v - self.q(0)));
        }
        if v == self.s() {
            return Some(Role::S);
        }
        if v == self.t() {
            return Some(Role::T);
        }
        (v < self.n()).then(|| Role::ExtraA(v - self.extra_a(0)))
    }

    /// `role first..last` lines, one per vertex class, 1-based role names.
    pub fn id_table(&self) -> String {
        let ChainShape {
            hubs,
            pairs,
            a_size,
            d_size,
        } = self.shape;
        let mut rows = vec![
            format!(
                "a[i,j,k] {}..{}  id = {} + ((i-1)*{pairs} + (j-1))*{a_size} + (k-1)",
                self.a(0, 0, 0),
                self.a(hubs - 1, pairs - 1, a_size - 1),
                self.a(0, 0, 0)
            ),
            format!(
                "b[i,j] {}..{}  id = {} + (i-1)*{pairs} + (j-1)",
                self.b(0, 0),
                self.b(hubs - 1, pairs - 1),
                self.b(0, 0)
            ),
            format!(
                "c[i,j] {}..{}  id = {} + (i-1)*{pairs} + (j-1)",
                self.c(0, 0),
                self.c(hubs - 1, pairs - 1),
                self.c(0, 0)
            ),
            format!(
                "d[i,k] {}..{}  id = {} + (i-1)*{d_size} + (k-1)",
                self.d(0, 0),
                self.d(hubs - 1, d_size - 1),
                self.d(0, 0)
            ),
            format!("p[i] {}..{}  id = {} + (i-1)", self.p(0), self.p(hubs - 1), self.p(0)),
            format!("q[i] {}..{}  id = {} + (i-1)", self.q(0), self.q(hubs - 1), self.q(0)),
            format!("s {}", self.s()),
            format!("t {}", self.t()),
        ];
        if self.extra > 0 {
            rows.push(format!(
                "a[1,1,{}+e] {}..{}  id = {} + (e-1)",
                a_size,
                self.extra_a(0),
                self.extra_a(self.extra - 1),
                self.extra_a(0)
            ));
        }
        rows.join("\n") + "\n"
    }
}

/// Builds the gadget-chain graph for `shape` with `extra` additional
/// degree-2 vertices on b_{11} and c_{11}. Edge groups, in order: a–b and
/// a–c; b/c–p/q; d–p/q; p/q–s/t; then the extra vertices.
pub fn gadget_chain(shape: ChainShape, extra: usize) -> (Graph, GadgetChainLayout) {
    let l = GadgetChainLayout { shape, extra };
    let mut edges = Vec::new();
    for i in 0..shape.hubs {
        for j in 0..shape.pairs {
            for k in 0..shape.a_size {
                edges.push((l.a(i, j, k), l.b(i, j)));
                edges.push((l.a(i, j, k), l.c(i, j)));
            }
        }
    }
    for i in 0..shape.hubs {
        for j in 0..shape.pairs {
            edges.push((l.b(i, j), l.p(i)));
            edges.push((l.b(i, j), l.q(i)));
            edges.push((l.c(i, j), l.p(i)));
            edges.push((l.c(i, j), l.q(i)));
        }
    }
    for i in 0..shape.hubs {
        for k in 0..shape.d_size {
            edges.push((l.d(i, k), l.p(i)));
            edges.push((l.d(i, k), l.q(i)));
        }
    }
    for i in 0..shape.hubs {
        edges.push((l.p(i), l.s()));
        edges.push((l.p(i), l.t()));
        edges.push((l.q(i), l.s()));
        edges.push((l.q(i), l.t()));
    }
    for e in 0..extra {
        edges.push((l.extra_a(e), l.b(0, 0)));
        edges.push((l.extra_a(e), l.c(0, 0)));
    }
    (build(l.n(), edges, true), l)
}

/// The 182-vertex quadrangulation with minimum degree 2 and proper
/// orientation number 4, extended by `extra` degree-2 vertices.
pub fn theorem4(extra: usize) -> (Graph, GadgetChainLayout) {
    gadget_chain(ChainShape::THEOREM4, extra)
}
