//! Nicification: turn a valid tree decomposition into a rooted one whose
//! nodes are leaf / introduce / forget / binary join, with empty root and
//! leaf bags and the same width.

use super::TreeDecomposition;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum NiceNodeKind {
    Leaf,
    Introduce(u32),
    Forget(u32),
    Join,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NiceNode {
    pub kind: NiceNodeKind,
    /// Sorted bag.
    pub bag: Vec<u32>,
    pub children: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
    pub root: usize,
}

impl NiceTreeDecomposition {
    pub fn width(&self) -> usize {
        self.nodes.iter().map(|t| t.bag.len()).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node ids in bottom-up (children before parents) order.
    pub fn postorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((t, expanded)) = stack.pop() {
            if expanded {
                order.push(t);
            } else {
                stack.push((t, true));
                for &ch in &self.nodes[t].children {
                    stack.push((ch, false));
                }
            }
        }
        order
    }

    /// The underlying plain decomposition (for validation).
    pub fn as_tree_decomposition(&self) -> TreeDecomposition {
        let bags = self.nodes.iter().map(|t| t.bag.clone()).collect();
        let mut edges = Vec::new();
        for (i, node) in self.nodes.iter().enumerate() {
            for &ch in &node.children {
                edges.push((i, ch));
            }
        }
        TreeDecomposition::new(bags, edges)
    }

    /// Structural sanity check of the nice-node constraints.
    pub fn check_shape(&self) -> Result<()> {
        for (i, node) in self.nodes.iter().enumerate() {
            let fail = |msg: String| Err(Error::InvalidDecomposition(format!("node {i}: {msg}")));
            match node.kind {
                NiceNodeKind::Leaf => {
                    if !node.bag.is_empty() || !node.children.is_empty() {
                        return fail("leaf must have empty bag and no children".into());
                    }
                }
                NiceNodeKind::Introduce(v) => {
                    if node.children.len() != 1 {
                        return fail("introduce must have one child".into());
                    }
                    let child = &self.nodes[node.children[0]];
                    let mut want = child.bag.clone();
                    want.push(v);
                    want.sort_unstable();
                    if node.bag != want || child.bag.binary_search(&v).is_ok() {
                        return fail(format!("introduce of {v} malformed"));
                    }
                }
                NiceNodeKind::Forget(v) => {
                    if node.children.len() != 1 {
                        return fail("forget must have one child".into());
                    }
                    let child = &self.nodes[node.children[0]];
                    let mut want = node.bag.clone();
                    want.push(v);
                    want.sort_unstable();
                    if child.bag != want || node.bag.binary_search(&v).is_ok() {
                        return fail(format!("forget of {v} malformed"));
                    }
                }
                NiceNodeKind::Join => {
                    if node.children.len() != 2 {
                        return fail("join must have exactly two children".into());
                    }
                    for &ch in &node.children {
                        if self.nodes[ch].bag != node.bag {
                            return fail("join child bag differs".into());
                        }
                    }
                }
            }
        }
        if !self.nodes[self.root].bag.is_empty() {
            return Err(Error::InvalidDecomposition("root bag must be empty".into()));
        }
        Ok(())
    }
}

struct Builder {
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn push(&mut self, kind: NiceNodeKind, bag: Vec<u32>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    /// Leaf plus introduces building up `bag`.
    fn chain_from_empty(&mut self, bag: &[u32]) -> usize {
        let mut cur = self.push(NiceNodeKind::Leaf, Vec::new(), Vec::new());
        let mut acc: Vec<u32> = Vec::new();
        for &v in bag {
            acc.push(v);
            acc.sort_unstable();
            cur = self.push(NiceNodeKind::Introduce(v), acc.clone(), vec![cur]);
        }
        cur
    }

    /// Forgets then introduces transforming the top bag `from` into `to`.
    fn transition(&mut self, mut cur: usize, from: &[u32], to: &[u32]) -> usize {
        let mut acc: Vec<u32> = from.to_vec();
        for &v in from {
            if to.binary_search(&v).is_err() {
                acc.retain(|&x| x != v);
                cur = self.push(NiceNodeKind::Forget(v), acc.clone(), vec![cur]);
            }
        }
        for &v in to {
            if from.binary_search(&v).is_err() {
                acc.push(v);
                acc.sort_unstable();
                cur = self.push(NiceNodeKind::Introduce(v), acc.clone(), vec![cur]);
            }
        }
        cur
    }
}

/// Produces a nice tree decomposition of the same width. Join nodes are
/// strictly binary and the root and leaf bags are empty.
pub fn nicify(td: &TreeDecomposition) -> Result<NiceTreeDecomposition> {
    let mut bags = td.bags.clone();
    let mut adj = td.adjacency();

    if bags.is_empty() {
        let mut b = Builder { nodes: Vec::new() };
        let root = b.push(NiceNodeKind::Leaf, Vec::new(), Vec::new());
        return Ok(NiceTreeDecomposition { nodes: b.nodes, root });
    }

    // Contract bags that are subsets of a neighbor; keeps the node count
    // proportional to the vertex count for sensible inputs.
    let mut alive: Vec<bool> = vec![true; bags.len()];
    loop {
        let mut changed = false;
        for i in 0..bags.len() {
            if !alive[i] {
                continue;
            }
            let target = adj[i].iter().copied().find(|&j| {
                alive[j] && bags[i].iter().all(|v| bags[j].binary_search(v).is_ok())
            });
            if let Some(j) = target {
                if alive.iter().filter(|&&a| a).count() == 1 {
                    break;
                }
                // Reattach i's other neighbors to j.
                let neighbors = adj[i].clone();
                for &k in &neighbors {
                    if k != j {
                        adj[k].retain(|&x| x != i);
                        adj[k].push(j);
                        adj[j].push(k);
                    }
                }
                adj[j].retain(|&x| x != i);
                adj[i].clear();
                alive[i] = false;
                bags[i].clear();
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let root0 = (0..bags.len()).find(|&i| alive[i]).unwrap();
    let mut b = Builder { nodes: Vec::new() };

    // Iterative post-order over the contracted tree.
    #[derive(Clone)]
    enum Frame {
        Enter(usize, usize),  // (node, parent)
        Exit(usize, usize),
    }
    let mut built: Vec<Option<usize>> = vec![None; bags.len()];
    let mut order: Vec<Frame> = vec![Frame::Enter(root0, usize::MAX)];
    let mut stack = Vec::new();
    while let Some(f) = order.pop() {
        match f {
            Frame::Enter(t, parent) => {
                order.push(Frame::Exit(t, parent));
                for &s in &adj[t] {
                    if s != parent {
                        order.push(Frame::Enter(s, t));
                    }
                }
                stack.push(t);
            }
            Frame::Exit(t, parent) => {
                // Children subtrees, each transitioned to bag(t).
                let mut tops: Vec<usize> = Vec::new();
                for &s in &adj[t] {
                    if s != parent {
                        let sub = built[s].unwrap();
                        let top_bag = b.nodes[sub].bag.clone();
                        tops.push(b.transition(sub, &top_bag, &bags[t]));
                    }
                }
                let node = match tops.len() {
                    0 => b.chain_from_empty(&bags[t]),
                    1 => tops[0],
                    _ => {
                        let mut cur = tops[0];
                        for &other in &tops[1..] {
                            cur = b.push(NiceNodeKind::Join, bags[t].clone(), vec![cur, other]);
                        }
                        cur
                    }
                };
                built[t] = Some(node);
            }
        }
    }
    let top = built[root0].unwrap();
    let top_bag = b.nodes[top].bag.clone();
    let root = b.transition(top, &top_bag, &[]);
    let nice = NiceTreeDecomposition { nodes: b.nodes, root };
    nice.check_shape()?;
    Ok(nice)
}
