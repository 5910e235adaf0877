//! Tree and path decompositions: parsing, validation, nicification, and
//! elimination-ordering heuristics.

mod heuristic;
mod io;
mod nice;

pub use heuristic::{heuristic_treedec, Strategy};
pub use io::{emit_td, parse_td};
pub use nice::{nicify, NiceNode, NiceNodeKind, NiceTreeDecomposition};

use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// A tree decomposition: bags indexed by node id plus tree edges. Path
/// decompositions are represented as degenerate tree decompositions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    /// Sorted vertex lists.
    pub bags: Vec<Vec<u32>>,
    /// Tree edges between bag ids.
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<Vec<u32>>, edges: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        TreeDecomposition { bags, edges }
    }

    /// A path decomposition given as a bag sequence.
    pub fn path(bags: Vec<Vec<u32>>) -> Self {
        let edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
        Self::new(bags, edges)
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Checks the three decomposition conditions against `g` and that the bag
    /// graph is a tree. Reports the first violation found.
    pub fn validate(&self, g: &Graph) -> Result<(), Violation> {
        let nb = self.bags.len();
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v as usize >= g.n() {
                    return Err(Violation::BagVertexOutOfRange { bag: i, vertex: v as usize });
                }
            }
        }
        for &(a, b) in &self.edges {
            if a >= nb || b >= nb {
                return Err(Violation::NotATree);
            }
        }
        if nb == 0 {
            return if g.n() == 0 { Ok(()) } else { Err(Violation::VertexUncovered(0)) };
        }
        if self.edges.len() != nb - 1 {
            return Err(Violation::NotATree);
        }
        let adj = self.adjacency();
        let mut seen = vec![false; nb];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(t) = stack.pop() {
            for &s in &adj[t] {
                if !seen[s] {
                    seen[s] = true;
                    count += 1;
                    stack.push(s);
                }
            }
        }
        if count != nb {
            return Err(Violation::NotATree);
        }

        // Condition 1: every vertex in some bag.
        let mut covered = vec![false; g.n()];
        for bag in &self.bags {
            for &v in bag {
                covered[v as usize] = true;
            }
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(Violation::VertexUncovered(v));
        }

        // Condition 2: every edge inside some bag.
        'edges: for (u, v) in g.edges() {
            for bag in &self.bags {
                if bag.binary_search(&u).is_ok() && bag.binary_search(&v).is_ok() {
                    continue 'edges;
                }
            }
            return Err(Violation::EdgeUncovered(u as usize, v as usize));
        }

        // Condition 3: the bags containing each vertex induce a subtree.
        for v in 0..g.n() as u32 {
            let holders: BTreeSet<usize> = (0..nb)
                .filter(|&i| self.bags[i].binary_search(&v).is_ok())
                .collect();
            let start = *holders.iter().next().unwrap();
            let mut seen = BTreeSet::new();
            seen.insert(start);
            let mut stack = vec![start];
            while let Some(t) = stack.pop() {
                for &s in &adj[t] {
                    if holders.contains(&s) && seen.insert(s) {
                        stack.push(s);
                    }
                }
            }
            if seen.len() != holders.len() {
                return Err(Violation::VertexBagsDisconnected(v as usize));
            }
        }
        Ok(())
    }
}

/// First violated decomposition condition, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    BagVertexOutOfRange { bag: usize, vertex: usize },
    NotATree,
    VertexUncovered(usize),
    EdgeUncovered(usize, usize),
    VertexBagsDisconnected(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BagVertexOutOfRange { bag, vertex } => {
                write!(f, "bag {bag} references unknown vertex {vertex}")
            }
            Violation::NotATree => write!(f, "bag graph is not a tree"),
            Violation::VertexUncovered(v) => write!(f, "vertex {v} is in no bag"),
            Violation::EdgeUncovered(u, v) => write!(f, "edge ({u},{v}) is inside no bag"),
            Violation::VertexBagsDisconnected(v) => {
                write!(f, "bags containing vertex {v} do not form a connected subtree")
            }
        }
    }
}

#[cfg(test)]
mod tests;
