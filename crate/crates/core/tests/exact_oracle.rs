mod common;

use common::{brute_force_chi, brute_force_proper_k, corpus, dpll};
use orientkit::exact::{
    decode_model, exists_proper_k, export_cnf, proper_orientation_number, quadrangulation_number,
};
use orientkit::generators::{cycle, path, pdw, q3};
use orientkit::{pseudoarboricity, verify_orientation};

#[test]
fn frozen_small_values() {
    // enumeration over all 4 and 16 orientations respectively
    assert!(brute_force_proper_k(&path(3).unwrap(), 1));
    assert!(!brute_force_proper_k(&cycle(4).unwrap(), 1));
    assert_eq!(brute_force_chi(&cycle(4).unwrap()), 2);
    assert_eq!(brute_force_chi(&q3()), 2);
}

#[test]
fn search_agrees_with_enumeration() {
    for g in corpus() {
        for k in 1..=3 {
            let found = exists_proper_k(&g, k);
            assert_eq!(found.is_some(), brute_force_proper_k(&g, k), "{g} k={k}");
            if let Some(o) = found {
                let rep = verify_orientation(&g, &o).unwrap();
                assert!(rep.proper && rep.max_indegree <= k);
                // monotone: the same witness serves k + 1
                assert!(exists_proper_k(&g, k + 1).is_some());
            }
        }
    }
}

#[test]
fn exact_number_bounds() {
    for g in corpus().into_iter().step_by(7) {
        let r = proper_orientation_number(&g, 8).unwrap();
        assert_eq!(r.value, brute_force_chi(&g));
        assert!(r.value >= pseudoarboricity(&g));
        let rep = verify_orientation(&g, &r.witness).unwrap();
        assert!(rep.proper && rep.max_indegree <= r.value);
    }
}

#[test]
fn cnf_agrees_with_search() {
    for g in corpus().into_iter().step_by(3) {
        for k in 1..=3 {
            let cnf = export_cnf(&g, k);
            let model = dpll(&cnf);
            assert_eq!(model.is_some(), exists_proper_k(&g, k).is_some(), "{g} k={k}");
            if let Some(model) = model {
                assert!(cnf.satisfied_by(&model));
                let lits: Vec<i32> = model
                    .iter()
                    .enumerate()
                    .map(|(i, &b)| if b { i as i32 + 1 } else { -(i as i32 + 1) })
                    .collect();
                let o = decode_model(&g, k, &lits).unwrap();
                let rep = verify_orientation(&g, &o).unwrap();
                assert!(rep.proper && rep.max_indegree <= k, "{g} k={k}");
            }
        }
    }
}

#[test]
fn cnf_small_examples() {
    let edge = path(2).unwrap();
    assert!(dpll(&export_cnf(&edge, 1)).is_some());
    let c4 = cycle(4).unwrap();
    assert!(dpll(&export_cnf(&c4, 1)).is_none());
    let model = dpll(&export_cnf(&c4, 2)).unwrap();
    let lits: Vec<i32> = (1..=4).map(|v| if model[v - 1] { v as i32 } else { -(v as i32) }).collect();
    let o = decode_model(&c4, 2, &lits).unwrap();
    assert!(verify_orientation(&c4, &o).unwrap().proper);
}

#[test]
fn theorem4_cnf_shape() {
    let (g, _) = orientkit::generators::theorem4(0);
    let cnf = export_cnf(&g, 3);
    assert_eq!(cnf.direction_vars, 360);
    let text = cnf.to_dimacs();
    assert_eq!(text.lines().filter(|l| l.starts_with("c edge ")).count(), 360);
    assert!(text.contains("c edge 359 : 179 181\n"));
}

#[test]
fn quadrangulations_agree_with_search() {
    for g in [q3(), pdw(3).unwrap(), pdw(4).unwrap(), pdw(5).unwrap(), pdw(6).unwrap()] {
        assert!(g.m() <= 24);
        let exact = proper_orientation_number(&g, 4).unwrap().value;
        assert_eq!(quadrangulation_number(&g).unwrap(), exact);
    }
}
