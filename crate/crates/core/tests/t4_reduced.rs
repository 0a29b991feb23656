//! The certificate's deduction chain checked against whole-graph search on
//! shrunken gadget-chain graphs.

mod common;

use orientkit::exact::exists_proper_k;
use orientkit::generators::ChainShape;
use orientkit::t4proof::{certify_gadget_chain, chain_graph, CertificateParams};

const CAP_ONE: ChainShape = ChainShape {
    hubs: 2,
    pairs: 2,
    a_size: 3,
    d_size: 3,
};

#[test]
fn cap_one_analogue_matches_search() {
    let params = CertificateParams::new(CAP_ONE, 1);
    let cert = certify_gadget_chain(&params);
    assert!(cert.conclusion);
    assert_eq!(cert.step1.enumerated_count, 1 << 6);
    let g = chain_graph(&params);
    assert_eq!(g.m(), 60);
    assert!(exists_proper_k(&g, 1).is_none());
}

#[test]
fn cap_one_analogue_mutated() {
    let params = CertificateParams {
        right_cap: 2,
        ..CertificateParams::new(CAP_ONE, 1)
    };
    assert!(!certify_gadget_chain(&params).conclusion);
}

#[test]
fn undersized_gadgets_do_not_certify() {
    // step 1 needs a_size >= 2 cap + 1
    let params = CertificateParams::new(
        ChainShape {
            a_size: 2,
            ..CAP_ONE
        },
        1,
    );
    let cert = certify_gadget_chain(&params);
    assert!(!cert.conclusion);
    assert!(!cert.step1.holds());
}

/// Soundness sweep: whenever the chain concludes, search finds nothing.
#[test]
fn conclusion_implies_no_proper_orientation() {
    let mut concluded = 0;
    for hubs in 1..=2 {
        for pairs in 1..=2 {
            for a_size in 1..=3 {
                for d_size in 1..=3 {
                    for cap in 1..=2 {
                        let shape = ChainShape {
                            hubs,
                            pairs,
                            a_size,
                            d_size,
                        };
                        let params = CertificateParams::new(shape, cap);
                        let cert = certify_gadget_chain(&params);
                        let found = exists_proper_k(&chain_graph(&params), cap);
                        if cert.conclusion {
                            concluded += 1;
                            assert!(found.is_none(), "{shape:?} cap {cap}");
                        }
                    }
                }
            }
        }
    }
    assert!(concluded > 0);
}

#[test]
fn cap_two_chain_without_enough_hubs() {
    // the chain reaches its contradiction at step 2, but the s/t gadget is
    // too small to hold, so no conclusion is claimed
    let params = CertificateParams::new(
        ChainShape {
            hubs: 2,
            pairs: 3,
            a_size: 5,
            d_size: 5,
        },
        2,
    );
    let cert = certify_gadget_chain(&params);
    assert!(cert.narrative.last().unwrap().contains("contradiction"));
    assert!(!cert.step3.holds());
    assert!(!cert.conclusion);
    assert!(exists_proper_k(&chain_graph(&params), 2).is_none());
}
