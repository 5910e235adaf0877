use packtw_core::gadgets::*;
use packtw_core::graph::Graph;
use packtw_core::oracle::{verify_gadget, Budget};
use packtw_core::relations::Relation;
use std::time::Instant;

#[test]
fn probe_toggle_k3() {
    let t0 = Instant::now();
    let g = toggle_gadget(&Graph::complete(3), None).unwrap();
    println!("toggle(K3): {} vertices, {} edges, built in {:?}", g.graph.n(), g.graph.m(), t0.elapsed());
    let t0 = Instant::now();
    let mut budget = Budget::new(2_000_000_000);
    let report = verify_gadget(&g, &mut budget).unwrap();
    println!("verify: dist_ok={} arb_ok={} nodes={} time={:?}", report.dist_ok, report.arb_ok, budget.used(), t0.elapsed());
    assert!(report.ok());
}

#[test]
fn probe_arb_111() {
    let r = Relation::new(3, 1, [vec![1,1,1]]).unwrap();
    let t0 = Instant::now();
    let g = arb_relation_gadget(&Graph::complete(3), &r, None).unwrap();
    println!("arb(111): {} vertices, built in {:?}", g.graph.n(), t0.elapsed());
    let t0 = Instant::now();
    let mut budget = Budget::new(2_000_000_000);
    let report = verify_gadget(&g, &mut budget).unwrap();
    println!("verify: dist_ok={} arb_ok={} nodes={} time={:?}", report.dist_ok, report.arb_ok, budget.used(), t0.elapsed());
    assert!(report.ok());
}

#[test]
fn probe_arb_10_01() {
    let r = Relation::new(2, 1, [vec![1,0], vec![0,1]]).unwrap();
    let t0 = Instant::now();
    let g = arb_relation_gadget(&Graph::complete(3), &r, None).unwrap();
    println!("arb(10/01): {} vertices, built in {:?}", g.graph.n(), t0.elapsed());
    let t0 = Instant::now();
    let mut budget = Budget::new(2_000_000_000);
    let report = verify_gadget(&g, &mut budget).unwrap();
    println!("verify: dist_ok={} arb_ok={} nodes={} time={:?}", report.dist_ok, report.arb_ok, budget.used(), t0.elapsed());
    assert!(report.ok());
}
