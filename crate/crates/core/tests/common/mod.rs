//! Independent oracles. Nothing here calls into the flow code or the
//! backtracking search.
#![allow(dead_code)]

use orientkit::exact::Cnf;
use orientkit::{Graph, Rational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// max over nonempty vertex subsets of 2|E(H)|/|V(H)|.
pub fn brute_force_mad(g: &Graph) -> Rational {
    let n = g.n();
    assert!(n <= 20);
    let mut best = Rational::integer(0);
    for mask in 1u32..(1 << n) {
        let edges = g
            .edges()
            .iter()
            .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
            .count();
        let d = Rational::new(2 * edges as i64, mask.count_ones() as i64);
        if d > best {
            best = d;
        }
    }
    best
}

fn indegrees_of(g: &Graph, mask: u64) -> Vec<usize> {
    let mut indeg = vec![0; g.n()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if mask >> e & 1 == 1 {
            indeg[v] += 1;
        } else {
            indeg[u] += 1;
        }
    }
    indeg
}

/// Whether some orientation among all 2^|E| is proper with max indegree ≤ k.
pub fn brute_force_proper_k(g: &Graph, k: usize) -> bool {
    let m = g.m();
    assert!(m <= 24);
    (0u64..(1 << m)).any(|mask| {
        let indeg = indegrees_of(g, mask);
        indeg.iter().all(|&d| d <= k) && g.edges().iter().all(|&(u, v)| indeg[u] != indeg[v])
    })
}

/// Least k with a proper k-orientation, by enumeration.
pub fn brute_force_chi(g: &Graph) -> usize {
    (0..=g.m()).find(|&k| brute_force_proper_k(g, k)).unwrap()
}

/// Whether some orientation has max indegree ≤ k, by enumeration.
pub fn brute_force_k_orientable(g: &Graph, k: usize) -> bool {
    let m = g.m();
    assert!(m <= 24);
    (0u64..(1 << m)).any(|mask| indegrees_of(g, mask).iter().all(|&d| d <= k))
}

/// Plain DPLL with unit propagation; returns a model indexed by var - 1.
pub fn dpll(cnf: &Cnf) -> Option<Vec<bool>> {
    let mut assign: Vec<Option<bool>> = vec![None; cnf.num_vars];
    if solve(&cnf.clauses, &mut assign) {
        Some(assign.into_iter().map(|v| v.unwrap_or(false)).collect())
    } else {
        None
    }
}

fn value(assign: &[Option<bool>], lit: i32) -> Option<bool> {
    assign[lit.unsigned_abs() as usize - 1].map(|b| b == (lit > 0))
}

fn solve(clauses: &[Vec<i32>], assign: &mut Vec<Option<bool>>) -> bool {
    let mut trail = Vec::new();
    loop {
        let mut unit = None;
        for c in clauses {
            let mut unassigned = None;
            let mut open = 0;
            let mut sat = false;
            for &l in c {
                match value(assign, l) {
                    Some(true) => {
                        sat = true;
                        break;
                    }
                    Some(false) => {}
                    None => {
                        open += 1;
                        unassigned = Some(l);
                    }
                }
            }
            if sat {
                continue;
            }
            if open == 0 {
                for v in trail {
                    assign[v] = None;
                }
                return false;
            }
            if open == 1 {
                unit = unassigned;
                break;
            }
        }
        match unit {
            Some(l) => {
                let v = l.unsigned_abs() as usize - 1;
                assign[v] = Some(l > 0);
                trail.push(v);
            }
            None => break,
        }
    }
    let Some(var) = assign.iter().position(|a| a.is_none()) else {
        return true;
    };
    for choice in [true, false] {
        assign[var] = Some(choice);
        if solve(clauses, assign) {
            return true;
        }
    }
    assign[var] = None;
    for v in trail {
        assign[v] = None;
    }
    false
}

/// Erdős–Rényi style graph, no loops, with the given edge probability.
pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
            }
        }
    }
    Graph::from_edges(n, edges, false).unwrap()
}

/// Random bipartite graph with sides `0..a` and `a..a+b`.
pub fn random_bipartite(rng: &mut StdRng, a: usize, b: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(a + b, edges, false).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Every graph on `n` vertices (edges in lexicographic pair order).
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges, false).unwrap()
    })
}

/// Exact-search corpus: every graph on 2..=5 vertices plus random graphs
/// on 5..=9 vertices with at most 14 edges.
pub fn corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = (2..=5).flat_map(all_graphs).filter(|g| g.m() > 0).collect();
    let mut r = rng(21);
    while out.len() < 1200 {
        let n = 5 + out.len() % 5;
        let g = random_graph(&mut r, n, 0.35);
        if g.m() > 0 && g.m() <= 14 {
            out.push(g);
        }
    }
    out
}

/// `model[i]` is variable `i + 1`; rendered as signed literals.
pub fn literals(model: &[bool]) -> Vec<i32> {
    model
        .iter()
        .enumerate()
        .map(|(i, &b)| if b { i as i32 + 1 } else { -(i as i32 + 1) })
        .collect()
}
