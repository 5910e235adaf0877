//! Block / cutvertex decomposition via the standard DFS lowpoint algorithm.

use super::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Blocks (maximal 2-connected components or bridges), cutvertices, and the
/// block tree: `tree[i]` lists the cutvertices on block `i`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Vec<usize>>,
    pub cutvertices: Vec<usize>,
    /// For each block, the cutvertices it contains.
    pub tree: Vec<Vec<usize>>,
}

pub(super) fn decompose(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // Frame: (vertex, parent, next adjacency index).
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0usize;
        while let Some(frame) = stack.last_mut() {
            let (u, parent, idx) = (frame.0, frame.1, frame.2);
            if idx < g.neighbors(u).len() {
                frame.2 += 1;
                let w = g.neighbors(u)[idx] as usize;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else if disc[w] < disc[u] {
                    // back edge
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(pframe) = stack.last_mut() {
                    let p = pframe.0;
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        // Pop the block rooted at the tree edge (p, u).
                        let mut verts = BTreeSet::new();
                        while let Some(&(a, b)) = edge_stack.last() {
                            edge_stack.pop();
                            verts.insert(a);
                            verts.insert(b);
                            if a == p && b == u {
                                break;
                            }
                        }
                        if !verts.is_empty() {
                            blocks.push(verts.into_iter().collect());
                        }
                        if p != root {
                            is_cut[p] = true;
                        }
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }

    let cutvertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();
    let tree = blocks
        .iter()
        .map(|b| b.iter().copied().filter(|&v| is_cut[v]).collect())
        .collect();
    BlockDecomposition { blocks, cutvertices, tree }
}
