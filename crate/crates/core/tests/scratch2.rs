use packtw_core::gadgets::*;
use packtw_core::graph::Graph;
use packtw_core::oracle::{verify_gadget, Budget};
use packtw_core::relations::rel_cneq;
use std::time::Instant;

fn c4_base() -> Gadget {
    // portals a=0, b=1; internals u=2, m=3, w=4
    let graph = Graph::new(5, &[(0,2),(2,3),(3,4),(4,0),(1,2),(1,4)]).unwrap();
    Gadget {
        graph,
        portals: vec![0,1],
        context: GadgetContext { c: 1, pattern: Graph::cycle(4) },
        claimed: rel_cneq(1).unwrap(),
        coherent: Coherence::Unknown,
    }
}

#[test]
fn probe_c4_base() {
    let g = c4_base();
    let t0 = Instant::now();
    let mut budget = Budget::new(1_000_000_000);
    let report = verify_gadget(&g, &mut budget).unwrap();
    println!("c4 base: dist_ok={} arb_ok={} nodes={} {:?}", report.dist_ok, report.arb_ok, budget.used(), t0.elapsed());
    assert!(report.ok());
}

#[test]
fn probe_c4_eq_single() {
    let base = c4_base();
    let g = eq_gadget_single(1, &Graph::cycle(4), Some(&base)).unwrap();
    println!("eq_single(1,C4): {} vertices", g.graph.n());
    let t0 = Instant::now();
    let mut budget = Budget::new(1_000_000_000);
    let report = verify_gadget(&g, &mut budget).unwrap();
    println!("verify: dist_ok={} arb_ok={} nodes={} {:?}", report.dist_ok, report.arb_ok, budget.used(), t0.elapsed());
    assert!(report.ok());
}

#[test]
fn probe_c4_toggle() {
    let base = c4_base();
    let g = toggle_gadget(&Graph::cycle(4), Some(&base)).unwrap();
    println!("toggle(C4): {} vertices", g.graph.n());
    let t0 = Instant::now();
    let mut budget = Budget::new(1_000_000_000);
    let report = verify_gadget(&g, &mut budget).unwrap();
    println!("verify: dist_ok={} arb_ok={} nodes={} {:?}", report.dist_ok, report.arb_ok, budget.used(), t0.elapsed());
    assert!(report.ok());
}

#[test]
fn probe_cover_2_3_1() {
    let t0 = Instant::now();
    let g = cover_gadget(2, 3, 1).unwrap();
    println!("cover(2,3,1): {} vertices built {:?}", g.graph.n(), t0.elapsed());
    let t0 = Instant::now();
    let mut budget = Budget::new(1_000_000_000);
    match verify_gadget(&g, &mut budget) {
        Ok(report) => {
            println!("verify: dist_ok={} arb_ok={} nodes={} {:?}", report.dist_ok, report.arb_ok, budget.used(), t0.elapsed());
            assert!(report.ok());
        }
        Err(e) => println!("verify errored after {} nodes {:?}: {e}", budget.used(), t0.elapsed()),
    }
}
