//! Enumeration of the copies of a pattern graph inside a host graph.
//!
//! A copy is a subgraph of the host isomorphic to the pattern: a vertex set
//! together with the edge subset the isomorphism maps onto. Copies need not be
//! induced, and two copies on the same vertex set but different edge subsets
//! are distinct.

use super::Graph;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Patterns larger than this are rejected: automorphism groups and copy
/// enumeration are computed by brute force.
pub const MAX_PATTERN_VERTICES: usize = 10;

/// One subgraph copy: sorted vertex set, sorted edge subset, and one witness
/// injective homomorphism (pattern vertex -> host vertex).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Copy {
    pub vertices: Vec<u32>,
    pub edges: Vec<(u32, u32)>,
    pub witness: Vec<u32>,
}

/// All automorphisms of `h` (each a permutation image vector), by brute force.
pub fn automorphisms(h: &Graph) -> Result<Vec<Vec<usize>>> {
    if h.n() > MAX_PATTERN_VERTICES {
        return Err(Error::PatternTooLarge(h.n(), MAX_PATTERN_VERTICES));
    }
    fn rec(h: &Graph, perm: &mut Vec<usize>, used: &mut Vec<bool>, depth: usize, out: &mut Vec<Vec<usize>>) {
        if depth == h.n() {
            out.push(perm.clone());
            return;
        }
        'cand: for img in 0..h.n() {
            if used[img] || h.degree(img) != h.degree(depth) {
                continue;
            }
            for prev in 0..depth {
                if h.has_edge(depth, prev) != h.has_edge(img, perm[prev]) {
                    continue 'cand;
                }
            }
            perm[depth] = img;
            used[img] = true;
            rec(h, perm, used, depth + 1, out);
            used[img] = false;
        }
    }
    let mut result = Vec::new();
    rec(h, &mut vec![usize::MAX; h.n()], &mut vec![false; h.n()], 0, &mut result);
    Ok(result)
}

struct CopySearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    h_edges: Vec<(usize, usize)>,
    image: Vec<u32>,
    used: Vec<bool>,
    seen: BTreeSet<(Vec<u32>, Vec<(u32, u32)>)>,
    out: Vec<Copy>,
}

impl CopySearch<'_> {
    fn rec(&mut self, oi: usize) {
        if oi == self.order.len() {
            self.record();
            return;
        }
        let hv = self.order[oi];
        for gv in 0..self.g.n() {
            if self.used[gv] || self.g.degree(gv) < self.h.degree(hv) {
                continue;
            }
            let ok = self.h.neighbors(hv).iter().all(|&hn| {
                let img = self.image[hn as usize];
                img == u32::MAX || self.g.has_edge(gv, img as usize)
            });
            if !ok {
                continue;
            }
            self.image[hv] = gv as u32;
            self.used[gv] = true;
            self.rec(oi + 1);
            self.image[hv] = u32::MAX;
            self.used[gv] = false;
        }
    }

    fn record(&mut self) {
        let mut verts: Vec<u32> = self.image.clone();
        verts.sort_unstable();
        let mut edges: Vec<(u32, u32)> = self
            .h_edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.image[a], self.image[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        if self.seen.insert((verts.clone(), edges.clone())) {
            self.out.push(Copy { vertices: verts, edges, witness: self.image.clone() });
        }
    }
}

/// Every subgraph of `g` isomorphic to `h`, each listed exactly once.
pub fn enumerate_copies(g: &Graph, h: &Graph) -> Result<Vec<Copy>> {
    if h.n() > MAX_PATTERN_VERTICES {
        return Err(Error::PatternTooLarge(h.n(), MAX_PATTERN_VERTICES));
    }
    if h.n() > g.n() || h.n() == 0 {
        return Ok(Vec::new());
    }
    let mut search = CopySearch {
        g,
        h,
        order: search_order(h),
        h_edges: h.edges().map(|(a, b)| (a as usize, b as usize)).collect(),
        image: vec![u32::MAX; h.n()],
        used: vec![false; g.n()],
        seen: BTreeSet::new(),
        out: Vec::new(),
    };
    search.rec(0);
    let mut out = search.out;
    out.sort();
    Ok(out)
}

/// Orders pattern vertices so each one after the first attaches to an
/// already-placed neighbor when possible; this prunes the injective search.
fn search_order(h: &Graph) -> Vec<usize> {
    let n = h.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let start = (0..n).max_by_key(|&v| h.degree(v)).unwrap();
    order.push(start);
    placed[start] = true;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let attached = h.neighbors(v).iter().filter(|&&w| placed[w as usize]).count();
                (attached, h.degree(v))
            })
            .unwrap();
        order.push(next);
        placed[next] = true;
    }
    order
}
