mod common;

use common::{brute_force_k_orientable, random_bipartite, random_graph, rng};
use orientkit::generators::pdw;
use orientkit::orientation::ProperError;
use orientkit::{
    bipartition, k_orientation, mad_exact, proper_bipartite_orientation, proper_three_orientation,
    verify_orientation, Graph, Side,
};
use proptest::prelude::*;

#[test]
fn hakimi_equivalence_on_random_graphs() {
    let mut r = rng(11);
    for trial in 0..200 {
        let n = 2 + trial % 11;
        let g = random_graph(&mut r, n, 0.2 + 0.06 * (trial % 10) as f64);
        if g.m() == 0 {
            continue;
        }
        let mad = mad_exact(&g).unwrap();
        for k in 0..=4 {
            let flow = k_orientation(&g, k);
            assert_eq!(flow.is_ok(), mad.at_most_twice(k), "{g} k={k}");
            match flow {
                Ok(o) => {
                    let rep = verify_orientation(&g, &o).unwrap();
                    assert!(rep.max_indegree <= k);
                    assert_eq!(rep.indegrees.iter().sum::<usize>(), g.m());
                }
                Err(inf) => {
                    assert!(g.induced_edge_count(&inf.witness) > k * inf.witness.len());
                }
            }
        }
    }
}

#[test]
fn flow_feasibility_matches_enumeration() {
    let mut r = rng(12);
    for trial in 0..60 {
        let g = random_graph(&mut r, 4 + trial % 5, 0.5);
        if g.m() > 16 {
            continue;
        }
        for k in 0..=3 {
            assert_eq!(k_orientation(&g, k).is_ok(), brute_force_k_orientable(&g, k));
        }
    }
}

fn check_switching(g: &Graph, side: Side, k: usize) {
    let part = bipartition(g).unwrap();
    let base = k_orientation(g, k).unwrap();
    let o = proper_bipartite_orientation(g, &part, side, k).unwrap();
    let rep = verify_orientation(g, &o).unwrap();
    assert!(rep.proper);
    for v in 0..g.n() {
        if part.side(v) == side {
            assert_eq!(rep.indegrees[v], k + 1);
        } else {
            assert!(rep.indegrees[v] <= k);
        }
    }
    if !part.class(side).is_empty() {
        assert_eq!(rep.max_indegree, k + 1);
    }
    // only arcs leaving X change
    for e in 0..g.m() {
        if o.is_forward(e) != base.is_forward(e) {
            assert_eq!(part.side(base.tail(g, e)), side);
        }
    }
}

#[test]
fn switching_on_pseudo_double_wheels() {
    for m in 3..=10 {
        let g = pdw(m).unwrap();
        check_switching(&g, Side::X, 2);
        check_switching(&g, Side::Y, 2);
        let o = proper_three_orientation(&g).unwrap();
        let rep = verify_orientation(&g, &o).unwrap();
        assert!(rep.proper && rep.max_indegree == 3);
    }
}

#[test]
fn degree_precondition_reports_vertex() {
    let g = pdw(4).unwrap();
    let part = bipartition(&g).unwrap();
    assert!(matches!(
        proper_bipartite_orientation(&g, &part, Side::X, 3),
        Err(ProperError::PreconditionDegree { k: 3, .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn switching_postcondition(seed in any::<u64>(), a in 1usize..8, b in 1usize..10, k in 1usize..4) {
        let mut r = rng(seed);
        let g = random_bipartite(&mut r, a, b, 0.7);
        let part = orientkit::Bipartition::from_x_class(a + b, &(0..a).collect::<Vec<_>>());
        let degrees_ok = (0..a).all(|x| g.degree(x) > k);
        prop_assume!(degrees_ok && g.m() > 0 && mad_exact(&g).unwrap().at_most_twice(k));
        let o = proper_bipartite_orientation(&g, &part, Side::X, k).unwrap();
        let rep = verify_orientation(&g, &o).unwrap();
        prop_assert!(rep.proper);
        prop_assert!((0..a).all(|x| rep.indegrees[x] == k + 1));
        prop_assert!((a..a + b).all(|y| rep.indegrees[y] <= k));
    }

    #[test]
    fn indegrees_sum_to_edge_count(seed in any::<u64>(), n in 2usize..12, bits in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, 0.4);
        let dirs = (0..g.m()).map(|e| bits >> (e % 64) & 1 == 1).collect();
        let o = orientkit::Orientation::from_directions(dirs);
        let rep = verify_orientation(&g, &o).unwrap();
        prop_assert_eq!(rep.indegrees.iter().sum::<usize>(), g.m());
        prop_assert_eq!(rep.proper, rep.violations.is_empty());
    }

    #[test]
    fn parse_serialize_identity(seed in any::<u64>(), n in 1usize..15, planar in any::<bool>()) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n, 0.3).with_planar_asserted(planar);
        prop_assert_eq!(Graph::parse(&g.serialize()).unwrap(), g);
    }

    #[test]
    fn bipartition_is_proper_colouring(seed in any::<u64>(), a in 1usize..8, b in 1usize..8) {
        let mut r = rng(seed);
        let g = random_bipartite(&mut r, a, b, 0.5);
        let part = bipartition(&g).unwrap();
        prop_assert!(g.edges().iter().all(|&(u, v)| part.side(u) != part.side(v)));
        prop_assert_eq!(part.side(0), Side::X);
    }
}
