//! Exact proper orientation numbers for small graphs.
//!
//! [`exists_proper_k`] is a complete backtracking search over edge
//! directions. Edges are branched in order of decreasing endpoint-degree
//! sum (ties by edge index), forward direction first. A branch dies when an
//! indegree exceeds `k`, or when a vertex whose incident edges are all
//! decided has the same indegree as an equally finished neighbour.

use std::fmt::Write as _;

use thiserror::Error;

use crate::density::pseudoarboricity;
use crate::generators;
use crate::graph::{bipartition, Graph, Side};
use crate::orientation::Orientation;

struct Search<'g> {
    graph: &'g Graph,
    k: usize,
    order: Vec<usize>,
    indeg: Vec<usize>,
    undecided: Vec<usize>,
    direction: Vec<bool>,
}

impl Search<'_> {
    fn finished_clash(&self, w: usize) -> bool {
        self.undecided[w] == 0
            && self
                .graph
                .neighbors(w)
                .any(|x| self.undecided[x] == 0 && self.indeg[x] == self.indeg[w])
    }

    fn run(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let e = self.order[pos];
        let (u, v) = self.graph.edge(e);
        self.undecided[u] -= 1;
        self.undecided[v] -= 1;
        for forward in [true, false] {
            let head = if forward { v } else { u };
            if self.indeg[head] == self.k {
                continue;
            }
            self.indeg[head] += 1;
            self.direction[e] = forward;
            if !self.finished_clash(u) && !self.finished_clash(v) && self.run(pos + 1) {
                return true;
            }
            self.indeg[head] -= 1;
        }
        self.undecided[u] += 1;
        self.undecided[v] += 1;
        false
    }
}

/// Edge branching order: decreasing deg(u) + deg(v), then edge index.
pub fn branch_order(graph: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..graph.m()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = graph.edge(e);
        (std::cmp::Reverse(graph.degree(u) + graph.degree(v)), e)
    });
    order
}

/// First proper k-orientation in the deterministic search order, if any.
pub fn exists_proper_k(graph: &Graph, k: usize) -> Option<Orientation> {
    let mut search = Search {
        graph,
        k,
        order: branch_order(graph),
        indeg: vec![0; graph.n()],
        undecided: (0..graph.n()).map(|v| graph.degree(v)).collect(),
        direction: vec![true; graph.m()],
    };
    // isolated vertices are finished from the start and have no neighbours
    if search.run(0) {
        Some(Orientation::from_directions(search.direction))
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub value: usize,
    pub witness: Orientation,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("no proper k-orientation for any k <= {k_max}")]
    ExceedsCap { k_max: usize },
}

/// Least k ≤ `k_max` admitting a proper k-orientation. The scan starts at
/// the pseudoarboricity, below which no orientation at all fits.
pub fn proper_orientation_number(graph: &Graph, k_max: usize) -> Result<ExactResult, ExactError> {
    if graph.m() == 0 {
        return Ok(ExactResult {
            value: 0,
            witness: Orientation::from_directions(Vec::new()),
        });
    }
    let start = pseudoarboricity(graph).max(1);
    (start..=k_max)
        .find_map(|k| {
            exists_proper_k(graph, k).map(|witness| ExactResult { value: k, witness })
        })
        .ok_or(ExactError::ExceedsCap { k_max })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Lit {
    True,
    False,
    Var(i32),
}

impl Lit {
    fn neg(self) -> Lit {
        match self {
            Lit::True => Lit::False,
            Lit::False => Lit::True,
            Lit::Var(x) => Lit::Var(-x),
        }
    }
}

/// A DIMACS CNF formula. Variables `1..=m` are edge directions: variable
/// `e + 1` true means edge `e` points from its first-listed endpoint to
/// its second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    pub num_vars: usize,
    pub direction_vars: usize,
    pub clauses: Vec<Vec<i32>>,
    header: Vec<String>,
}

impl Cnf {
    fn new(header: Vec<String>, direction_vars: usize) -> Self {
        Cnf {
            num_vars: direction_vars,
            direction_vars,
            clauses: Vec::new(),
            header,
        }
    }

    fn fresh(&mut self) -> Lit {
        self.num_vars += 1;
        Lit::Var(self.num_vars as i32)
    }

    fn add(&mut self, lits: &[Lit]) {
        let mut clause = Vec::with_capacity(lits.len());
        for &l in lits {
            match l {
                Lit::True => return,
                Lit::False => {}
                Lit::Var(x) => clause.push(x),
            }
        }
        self.clauses.push(clause);
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        for line in &self.header {
            let _ = writeln!(out, "c {line}");
        }
        let _ = writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                let _ = write!(out, "{lit} ");
            }
            out.push_str("0\n");
        }
        out
    }

    /// Whether `assignment` (index `v - 1` holds variable `v`) satisfies
    /// every clause.
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
        })
    }
}

/// Sequential-counter registers r(v, j) ⇔ indeg(v) ≥ j for j in 0..=cap,
/// with the constants folded in.
fn indegree_registers(cnf: &mut Cnf, incoming: &[Lit], cap: usize) -> Vec<Lit> {
    // prev[j] = "at least j of the inputs seen so far are true"
    let mut prev: Vec<Lit> = (0..=cap)
        .map(|j| if j == 0 { Lit::True } else { Lit::False })
        .collect();
    for (i, &x) in incoming.iter().enumerate() {
        let mut cur = vec![Lit::True; cap + 1];
        for j in 1..=cap {
            if j > i + 1 {
                cur[j] = Lit::False;
                continue;
            }
            let s = cnf.fresh();
            cur[j] = s;
            cnf.add(&[prev[j].neg(), s]);
            cnf.add(&[x.neg(), prev[j - 1].neg(), s]);
            cnf.add(&[s.neg(), prev[j], x]);
            cnf.add(&[s.neg(), prev[j - 1]]);
        }
        prev = cur;
    }
    prev
}

/// CNF satisfiable iff `graph` has a proper k-orientation.
pub fn export_cnf(graph: &Graph, k: usize) -> Cnf {
    let mut header = vec![
        format!("proper {k}-orientation of a graph with n = {} m = {}", graph.n(), graph.m()),
        "variable e+1 is edge e; true orients u -> v".to_string(),
    ];
    header.extend(
        graph
            .edges()
            .iter()
            .enumerate()
            .map(|(i, (u, v))| format!("edge {i} : {u} {v}")),
    );
    let mut cnf = Cnf::new(header, graph.m());

    let registers: Vec<Vec<Lit>> = (0..graph.n())
        .map(|v| {
            let incoming: Vec<Lit> = graph
                .adjacency(v)
                .iter()
                .map(|&(_, e)| {
                    let x = Lit::Var(e as i32 + 1);
                    if graph.edge(e).1 == v {
                        x
                    } else {
                        x.neg()
                    }
                })
                .collect();
            let r = indegree_registers(&mut cnf, &incoming, k + 1);
            cnf.add(&[r[k + 1].neg()]);
            r
        })
        .collect();

    // r(·, k+1) is false in every model; fold it as a constant.
    let reg = |v: usize, j: usize| if j > k { Lit::False } else { registers[v][j] };
    for &(u, v) in graph.edges() {
        for t in 0..=k {
            cnf.add(&[reg(u, t).neg(), reg(u, t + 1), reg(v, t).neg(), reg(v, t + 1)]);
        }
    }
    cnf
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("incomplete model: direction variable {0} unassigned")]
    IncompleteModel(usize),
    #[error("model mentions variable {var} but the formula has {num_vars}")]
    UnknownVariable { var: usize, num_vars: usize },
    #[error("malformed model token `{0}`")]
    MalformedToken(String),
}

/// Reads a solver model: `v`-prefixed or bare integer literals; `c` and `s`
/// lines and `0` terminators are skipped.
pub fn parse_model(text: &str) -> Result<Vec<i32>, DecodeError> {
    let mut lits = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.starts_with('c') || line.starts_with('s') {
            continue;
        }
        let body = line.strip_prefix('v').unwrap_or(line);
        for tok in body.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| DecodeError::MalformedToken(tok.to_string()))?;
            if lit != 0 {
                lits.push(lit);
            }
        }
    }
    Ok(lits)
}

/// Orientation read off the direction variables of `export_cnf(graph, k)`.
/// The result is not checked; run it through the verifier.
pub fn decode_model(graph: &Graph, k: usize, assignment: &[i32]) -> Result<Orientation, DecodeError> {
    let num_vars = export_cnf(graph, k).num_vars;
    let mut value: Vec<Option<bool>> = vec![None; graph.m()];
    for &lit in assignment {
        let var = lit.unsigned_abs() as usize;
        if var == 0 || var > num_vars {
            return Err(DecodeError::UnknownVariable { var, num_vars });
        }
        if var <= graph.m() {
            value[var - 1] = Some(lit > 0);
        }
    }
    let direction = value
        .iter()
        .enumerate()
        .map(|(e, v)| v.ok_or(DecodeError::IncompleteModel(e + 1)))
        .collect::<Result<_, _>>()?;
    Ok(Orientation::from_directions(direction))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for smaller in permutations(n - 1) {
        for pos in 0..n {
            let mut p = smaller.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

/// Brute-force isomorphism test against the 3-cube, trying every map that
/// sends colour classes to colour classes (at most 2 · 4! · 4!).
pub fn is_isomorphic_to_q3(graph: &Graph) -> bool {
    if graph.n() != 8 || graph.m() != 12 || (0..8).any(|v| graph.degree(v) != 3) {
        return false;
    }
    let Ok(part) = bipartition(graph) else {
        return false;
    };
    let (gx, gy) = (part.class(Side::X), part.class(Side::Y));
    if gx.len() != 4 || gy.len() != 4 {
        return false;
    }
    let cube = generators::q3();
    let cube_part = bipartition(&cube).expect("cube is bipartite");
    let (cx, cy) = (cube_part.class(Side::X), cube_part.class(Side::Y));
    let perms = permutations(4);
    for (tx, ty) in [(&cx, &cy), (&cy, &cx)] {
        for px in &perms {
            for py in &perms {
                let mut map = [0usize; 8];
                for i in 0..4 {
                    map[gx[i]] = tx[px[i]];
                    map[gy[i]] = ty[py[i]];
                }
                if graph
                    .edges()
                    .iter()
                    .all(|&(u, v)| cube.has_edge(map[u], map[v]))
                {
                    return true;
                }
            }
        }
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    Connected,
    Bipartite,
    MinDegree,
    PlanarAsserted,
    EdgeEquality,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadrangulationError {
    #[error("precondition failed: {0:?}")]
    PreconditionFailed(Gate),
}

/// Proper orientation number of a quadrangulation with minimum degree 3:
/// 2 for the cube, 3 otherwise.
pub fn quadrangulation_number(graph: &Graph) -> Result<usize, QuadrangulationError> {
    let fail = |g| Err(QuadrangulationError::PreconditionFailed(g));
    if !graph.is_connected() {
        return fail(Gate::Connected);
    }
    if bipartition(graph).is_err() {
        return fail(Gate::Bipartite);
    }
    if graph.min_degree() < 3 {
        return fail(Gate::MinDegree);
    }
    if !graph.planar_asserted() {
        return fail(Gate::PlanarAsserted);
    }
    if graph.m() != 2 * graph.n() - 4 {
        return fail(Gate::EdgeEquality);
    }
    Ok(if is_isomorphic_to_q3(graph) { 2 } else { 3 })
}
