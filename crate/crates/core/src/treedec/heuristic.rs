//! Elimination-ordering heuristics producing valid tree decompositions.

use super::TreeDecomposition;
use crate::graph::Graph;
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    MinDegree,
    MinFill,
}

/// Eliminates vertices greedily; bag `i` is the closed neighborhood of the
/// `i`-th eliminated vertex at elimination time. The bag of vertex `v` is
/// attached to the bag of its earliest-eliminated remaining neighbor.
pub fn heuristic_treedec(g: &Graph, strategy: Strategy) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition::new(Vec::new(), Vec::new());
    }
    let mut nbrs: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().map(|&w| w as usize).collect())
        .collect();
    let mut alive: Vec<bool> = vec![true; n];
    let mut position = vec![usize::MAX; n];
    let mut bags: Vec<Vec<u32>> = Vec::with_capacity(n);
    let mut elim_order: Vec<usize> = Vec::with_capacity(n);

    for step in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| match strategy {
                Strategy::MinDegree => (nbrs[v].len(), v),
                Strategy::MinFill => {
                    let ns: Vec<usize> = nbrs[v].iter().copied().collect();
                    let mut fill = 0usize;
                    for i in 0..ns.len() {
                        for j in i + 1..ns.len() {
                            if !nbrs[ns[i]].contains(&ns[j]) {
                                fill += 1;
                            }
                        }
                    }
                    (fill, v)
                }
            })
            .unwrap();
        let mut bag: Vec<u32> = nbrs[v].iter().map(|&w| w as u32).collect();
        bag.push(v as u32);
        bag.sort_unstable();
        bags.push(bag);
        position[v] = step;
        elim_order.push(v);
        let ns: Vec<usize> = nbrs[v].iter().copied().collect();
        for i in 0..ns.len() {
            nbrs[ns[i]].remove(&v);
            for j in i + 1..ns.len() {
                nbrs[ns[i]].insert(ns[j]);
                nbrs[ns[j]].insert(ns[i]);
            }
        }
        alive[v] = false;
    }

    // Tree edges: bag of v attaches to the bag of the first-eliminated vertex
    // among the other members of bag(v); the last bag of each component is a
    // root, roots are chained to keep a single tree.
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, bag) in bags.iter().enumerate() {
        let next = bag
            .iter()
            .map(|&w| position[w as usize])
            .filter(|&p| p > i)
            .min();
        match next {
            Some(p) => edges.push((i, p)),
            None => roots.push(i),
        }
    }
    for pair in roots.windows(2) {
        edges.push((pair[0], pair[1]));
    }
    let _ = elim_order;
    TreeDecomposition::new(bags, edges)
}
