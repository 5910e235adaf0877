//! Brute force for permutation independent sets on `[k] x [k]` grids.

use super::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_K: usize = 7;

/// True iff `g`, on the vertex set `[k] x [k]` with cell `(i, j)` at id
/// `i * k + j`, has an independent set picking exactly one cell per row and
/// per column. Tries all `k!` permutations.
pub fn permiset_bruteforce(g: &Graph, k: usize, budget: &mut Budget) -> Result<bool> {
    if k > MAX_K {
        return Err(Error::Reduction(format!("k = {k} exceeds brute-force limit {MAX_K}")));
    }
    if g.n() != k * k {
        return Err(Error::Reduction(format!("graph has {} vertices, expected {}", g.n(), k * k)));
    }
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        budget.tick()?;
        let mut ok = true;
        'check: for i in 0..k {
            for j in i + 1..k {
                if g.has_edge(i * k + perm[i], j * k + perm[j]) {
                    ok = false;
                    break 'check;
                }
            }
        }
        if ok {
            return Ok(true);
        }
        if !next_permutation(&mut perm) {
            return Ok(false);
        }
    }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgeless_grid_is_yes() {
        let g = Graph::new(4, &[]).unwrap();
        assert!(permiset_bruteforce(&g, 2, &mut Budget::default()).unwrap());
    }

    #[test]
    fn complete_grid_is_no() {
        let g = Graph::complete(4);
        assert!(!permiset_bruteforce(&g, 2, &mut Budget::default()).unwrap());
    }

    #[test]
    fn edges_inside_one_row_only() {
        // k = 3, all edges within row 1: row 1 still contributes one cell, so
        // a permutation exists; cross-check by enumerating all 6 by hand.
        let k = 3;
        let mut edges = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                edges.push((k + a, k + b)); // row 1 cells: ids 3,4,5
            }
        }
        let g = Graph::new(k * k, &edges).unwrap();
        let mut count = 0;
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for p in perms {
            let indep = (0..k).all(|i| {
                (i + 1..k).all(|j| !g.has_edge(i * k + p[i], j * k + p[j]))
            });
            if indep {
                count += 1;
            }
        }
        assert_eq!(count, 6); // edges within one row never join two chosen cells
        assert!(permiset_bruteforce(&g, k, &mut Budget::default()).unwrap());
    }

    #[test]
    fn k_too_large_rejected() {
        let g = Graph::new(64, &[]).unwrap();
        assert!(permiset_bruteforce(&g, 8, &mut Budget::default()).is_err());
    }
}
