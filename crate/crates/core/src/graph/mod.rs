//! Core graph representation: undirected simple graphs with dense integer
//! vertex ids and optional provenance labels.

mod blocks;
mod copies;
mod io;

pub use blocks::BlockDecomposition;
pub use copies::{automorphisms, enumerate_copies, Copy, MAX_PATTERN_VERTICES};
pub use io::{parse_gr, to_gr};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Undirected simple graph. Vertices are `0..n`. Edges are stored normalized
/// with the smaller endpoint first; the adjacency lists are sorted.
///
/// Values are immutable after construction; all operations return new graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(u32, u32)>,
    #[serde(skip)]
    adj: Vec<Vec<u32>>,
    /// Provenance labels, used to track gadget origins through reductions.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    labels: Vec<String>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Duplicate edges are
    /// merged; out-of-range endpoints and self-loops are errors.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            set.insert((a as u32, b as u32));
        }
        Ok(Self::from_edge_set(n, set, Vec::new()))
    }

    fn from_edge_set(n: usize, edges: BTreeSet<(u32, u32)>, labels: Vec<String>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj, labels }
    }

    /// Rebuilds adjacency after deserialization.
    pub fn rebuild(mut self) -> Self {
        let edges = std::mem::take(&mut self.edges);
        Self::from_edge_set(self.n, edges, std::mem::take(&mut self.labels))
    }

    pub fn complete(d: usize) -> Self {
        let mut edges = BTreeSet::new();
        for u in 0..d as u32 {
            for v in (u + 1)..d as u32 {
                edges.insert((u, v));
            }
        }
        Self::from_edge_set(d, edges, Vec::new())
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut edges = BTreeSet::new();
        for u in 0..n as u32 {
            let v = (u + 1) % n as u32;
            edges.insert((u.min(v), u.max(v)));
        }
        Self::from_edge_set(n, edges, Vec::new())
    }

    pub fn path(n: usize) -> Self {
        let edges = (0..n.saturating_sub(1)).map(|u| (u, u + 1)).collect::<Vec<_>>();
        Self::new(n, &edges).unwrap()
    }

    /// Triangle with a pendant edge.
    pub fn paw() -> Self {
        Self::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let (a, b) = if u < v { (u as u32, v as u32) } else { (v as u32, u as u32) };
        self.edges.contains(&(a, b))
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(v).map(|s| s.as_str()).filter(|s| !s.is_empty())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert!(labels.len() == self.n || labels.is_empty());
        self.labels = labels;
        self
    }

    pub fn set_label(&mut self, v: usize, label: String) {
        if self.labels.is_empty() {
            self.labels = vec![String::new(); self.n];
        }
        self.labels[v] = label;
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w as usize);
                }
            }
        }
        count == self.n
    }

    /// Disjoint union; the second operand's vertices are shifted by `self.n()`.
    /// Returns the union and the offset applied to `other`'s vertex ids.
    pub fn disjoint_union(&self, other: &Graph) -> (Graph, usize) {
        let offset = self.n;
        let mut edges = self.edges.clone();
        for (u, v) in other.edges() {
            edges.insert((u + offset as u32, v + offset as u32));
        }
        let mut labels = Vec::new();
        if !self.labels.is_empty() || !other.labels.is_empty() {
            labels = vec![String::new(); self.n + other.n];
            for (i, l) in self.labels.iter().enumerate() {
                labels[i] = l.clone();
            }
            for (i, l) in other.labels.iter().enumerate() {
                labels[offset + i] = l.clone();
            }
        }
        (Graph::from_edge_set(self.n + other.n, edges, labels), offset)
    }

    /// Merges each class of vertices into a single vertex. Classes must be
    /// pairwise disjoint. Would-be self-loops are dropped and parallel edges
    /// merged, so the result is always simple. Returns the new graph and the
    /// old-to-new vertex map.
    pub fn identify_vertices(&self, classes: &[Vec<usize>]) -> Result<(Graph, Vec<usize>)> {
        let mut class_of = vec![usize::MAX; self.n];
        for (ci, class) in classes.iter().enumerate() {
            for &v in class {
                if v >= self.n {
                    return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
                }
                if class_of[v] != usize::MAX {
                    return Err(Error::OverlappingClasses(v));
                }
                class_of[v] = ci;
            }
        }
        // New ids: one per nonempty class (in class order), then the untouched
        // vertices in increasing order.
        let mut old_to_new = vec![usize::MAX; self.n];
        let mut next = 0usize;
        let mut class_id = vec![usize::MAX; classes.len()];
        for (ci, class) in classes.iter().enumerate() {
            if !class.is_empty() {
                class_id[ci] = next;
                next += 1;
            }
        }
        for v in 0..self.n {
            if class_of[v] != usize::MAX {
                old_to_new[v] = class_id[class_of[v]];
            } else {
                old_to_new[v] = next;
                next += 1;
            }
        }
        let mut edges = BTreeSet::new();
        for (u, v) in self.edges() {
            let (a, b) = (old_to_new[u as usize] as u32, old_to_new[v as usize] as u32);
            if a != b {
                edges.insert((a.min(b), a.max(b)));
            }
        }
        let mut labels = Vec::new();
        if !self.labels.is_empty() {
            labels = vec![String::new(); next];
            for v in 0..self.n {
                if labels[old_to_new[v]].is_empty() {
                    labels[old_to_new[v]] = self.labels[v].clone();
                }
            }
        }
        Ok((Graph::from_edge_set(next, edges, labels), old_to_new))
    }

    /// Replaces `v` with `t` pairwise non-adjacent copies, each inheriting
    /// `N(v)`. The copies take ids `v, n, n+1, ..., n+t-2`.
    pub fn blow_up(&self, v: usize, t: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if t == 0 {
            return Err(Error::ZeroBlowUp);
        }
        let mut edges = self.edges.clone();
        for k in 0..t - 1 {
            let copy = (self.n + k) as u32;
            for &w in &self.adj[v] {
                edges.insert((w.min(copy), w.max(copy)));
            }
        }
        let mut labels = self.labels.clone();
        if !labels.is_empty() {
            let base = labels[v].clone();
            labels.extend(std::iter::repeat(base).take(t - 1));
        }
        Ok(Graph::from_edge_set(self.n + t - 1, edges, labels))
    }

    /// Subgraph induced by `keep` (sorted order defines the new ids).
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut sorted: Vec<usize> = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut old_to_new = vec![usize::MAX; self.n];
        for (i, &v) in sorted.iter().enumerate() {
            old_to_new[v] = i;
        }
        let mut edges = BTreeSet::new();
        for (u, v) in self.edges() {
            let (a, b) = (old_to_new[u as usize], old_to_new[v as usize]);
            if a != usize::MAX && b != usize::MAX {
                edges.insert((a.min(b) as u32, a.max(b) as u32));
            }
        }
        let labels = if self.labels.is_empty() {
            Vec::new()
        } else {
            sorted.iter().map(|&v| self.labels[v].clone()).collect()
        };
        (Graph::from_edge_set(sorted.len(), edges, labels), sorted)
    }

    /// Applies a permutation `perm` (old id -> new id) to the vertex set.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut edges = BTreeSet::new();
        for (u, v) in self.edges() {
            let (a, b) = (perm[u as usize] as u32, perm[v as usize] as u32);
            edges.insert((a.min(b), a.max(b)));
        }
        let mut labels = Vec::new();
        if !self.labels.is_empty() {
            labels = vec![String::new(); self.n];
            for v in 0..self.n {
                labels[perm[v]] = self.labels[v].clone();
            }
        }
        Graph::from_edge_set(self.n, edges, labels)
    }

    pub fn blocks(&self) -> BlockDecomposition {
        blocks::decompose(self)
    }

    /// True iff every block induces a clique.
    pub fn is_block_graph(&self) -> bool {
        let dec = self.blocks();
        dec.blocks.iter().all(|b| {
            b.iter().all(|&u| b.iter().all(|&v| u == v || self.has_edge(u, v)))
        })
    }

    /// Minimum-cardinality separator inside a non-clique block, ties broken
    /// lexicographically by the sorted vertex id sequence. Errors if the block
    /// induces a clique.
    pub fn min_block_separator(&self, block: &[usize]) -> Result<Vec<usize>> {
        let mut block: Vec<usize> = block.to_vec();
        block.sort_unstable();
        let is_clique = block
            .iter()
            .all(|&u| block.iter().all(|&v| u == v || self.has_edge(u, v)));
        if is_clique {
            return Err(Error::InvalidDecomposition(
                "block is a clique, no internal separator exists".into(),
            ));
        }
        let k = block.len();
        // Subsets in order of (size, lexicographic on sorted ids).
        for size in 1..k {
            let mut best: Option<Vec<usize>> = None;
            let mut subset: Vec<usize> = (0..size).collect();
            loop {
                let sep: Vec<usize> = subset.iter().map(|&i| block[i]).collect();
                if self.disconnects(&block, &sep) {
                    match &best {
                        Some(b) if *b <= sep => {}
                        _ => best = Some(sep),
                    }
                }
                // next combination
                let mut i = size;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    if subset[i] != i + k - size {
                        subset[i] += 1;
                        for j in i + 1..size {
                            subset[j] = subset[j - 1] + 1;
                        }
                        break;
                    }
                    if i == 0 {
                        subset.clear();
                        break;
                    }
                }
                if subset.is_empty() {
                    break;
                }
            }
            if let Some(sep) = best {
                return Ok(sep);
            }
        }
        Err(Error::InvalidDecomposition("no separator found in block".into()))
    }

    fn disconnects(&self, block: &[usize], sep: &[usize]) -> bool {
        let rest: Vec<usize> = block.iter().copied().filter(|v| !sep.contains(v)).collect();
        if rest.len() < 2 {
            return false;
        }
        let inset: BTreeSet<usize> = rest.iter().copied().collect();
        let mut seen = BTreeSet::new();
        let mut stack = vec![rest[0]];
        seen.insert(rest[0]);
        while let Some(u) = stack.pop() {
            for &w in self.neighbors(u) {
                let w = w as usize;
                if inset.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() < rest.len()
    }

    /// Connected components of the subgraph induced by `verts`.
    pub fn components_within(&self, verts: &[usize]) -> Vec<Vec<usize>> {
        let inset: BTreeSet<usize> = verts.iter().copied().collect();
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut comps = Vec::new();
        for &start in verts {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    let w = w as usize;
                    if inset.contains(&w) && seen.insert(w) {
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }
}

/// Ordered association from pattern vertices to host vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMap {
    map: Vec<Option<u32>>,
}

impl VertexMap {
    pub fn empty(pattern_n: usize) -> Self {
        VertexMap { map: vec![None; pattern_n] }
    }

    pub fn from_full(images: &[usize]) -> Self {
        VertexMap { map: images.iter().map(|&v| Some(v as u32)).collect() }
    }

    pub fn set(&mut self, pattern_v: usize, host_v: usize) {
        self.map[pattern_v] = Some(host_v as u32);
    }

    pub fn get(&self, pattern_v: usize) -> Option<usize> {
        self.map.get(pattern_v).copied().flatten().map(|v| v as usize)
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.map.iter().enumerate().filter(|(_, v)| v.is_some()).map(|(i, _)| i)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.map.iter().flatten().all(|&v| seen.insert(v))
    }
}

#[cfg(test)]
mod tests;
