//! Executable lower-bound constructions: binary CSP to clique partition,
//! multiset to distinct-copy partition, and permutation independent set to
//! H-partition, each emitting the path decomposition its construction yields.

mod csp;
mod permiset;
mod single;

pub use csp::{reduce_csp_to_multiclique, Csp2Constraint, Csp2Instance, CspReductionResult};
pub use permiset::{reduce_permiset_to_hpartition, PermIsetInstance};
pub use single::reduce_multi_to_single;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::treedec::TreeDecomposition;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A reduction's emitted instance: graph, path-shaped decomposition, and
/// audit maps from source objects to vertex groups.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub decomposition: TreeDecomposition,
    /// Audit map: source object name -> vertex group.
    pub certificate: BTreeMap<String, Vec<u32>>,
}

/// Smallest multiple `l` of `d` with `(c+1)^(l-d) >= capacity`.
pub fn choose_ell(capacity: u64, c: u8, d: usize) -> usize {
    let base = (c as u64) + 1;
    let mut l = d;
    loop {
        let mut pow = 1u64;
        for _ in 0..(l - d) {
            pow = pow.saturating_mul(base);
        }
        if pow >= capacity {
            return l;
        }
        l += d;
    }
}

/// Deterministic injective map from `[1..=capacity]` into weight-divisible
/// vectors: value `v` maps to the base-`(c+1)` digits of `v-1` over the first
/// `l-d` coordinates (most significant first), followed by `d` padding
/// coordinates holding `p` ones then zeros, where `p` makes the total weight
/// divisible by `d`.
pub fn phi_encoding(capacity: u64, l: usize, c: u8, d: usize) -> Result<Vec<(u64, Vec<u8>)>> {
    let base = (c as u64) + 1;
    let digits = l - d;
    let mut cap_check = 1u64;
    for _ in 0..digits {
        cap_check = cap_check.saturating_mul(base);
        if cap_check >= capacity {
            break;
        }
    }
    if cap_check < capacity {
        return Err(Error::Reduction(format!(
            "capacity {capacity} exceeds (c+1)^(l-d) = {cap_check}"
        )));
    }
    let mut out = Vec::with_capacity(capacity as usize);
    for v in 1..=capacity {
        let mut t = vec![0u8; l];
        let mut rest = v - 1;
        for i in (0..digits).rev() {
            t[i] = (rest % base) as u8;
            rest /= base;
        }
        if rest != 0 {
            return Err(Error::Reduction(format!("value {v} does not fit in {digits} digits")));
        }
        let w: u64 = t.iter().map(|&x| x as u64).sum();
        let p = (d as u64 - w % d as u64) % d as u64;
        for i in 0..p as usize {
            t[digits + i] = 1;
        }
        out.push((v, t));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ell_choice_examples() {
        assert_eq!(choose_ell(2, 1, 3), 6);
        assert_eq!(choose_ell(1, 1, 3), 3);
        assert_eq!(choose_ell(9, 2, 3), 6);
    }

    #[test]
    fn phi_examples() {
        let phi = phi_encoding(2, 6, 1, 3).unwrap();
        assert_eq!(phi[0].1, vec![0, 0, 0, 0, 0, 0]);
        assert_eq!(phi[1].1, vec![0, 0, 1, 1, 1, 0]);
    }

    #[test]
    fn phi_images_are_regular_and_injective() {
        for (cap, c, d) in [(2u64, 1u8, 3usize), (9, 2, 3), (8, 1, 3), (4, 3, 4)] {
            let l = choose_ell(cap, c, d);
            let phi = phi_encoding(cap, l, c, d).unwrap();
            assert_eq!(phi.len() as u64, cap);
            let mut seen = std::collections::BTreeSet::new();
            for (_, t) in &phi {
                let w: u64 = t.iter().map(|&x| x as u64).sum();
                assert_eq!(w % d as u64, 0);
                assert!(t.iter().all(|&x| x <= c));
                assert!(seen.insert(t.clone()), "phi not injective");
            }
        }
    }

    #[test]
    fn phi_injective_at_exact_capacity() {
        // capacity = (c+1)^(l-d) exactly: distinct digit prefixes.
        let phi = phi_encoding(8, 6, 1, 3).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for (_, t) in &phi {
            assert!(seen.insert(t[..3].to_vec()));
        }
    }

    #[test]
    fn phi_rejects_over_capacity() {
        assert!(phi_encoding(3, 6, 1, 3).is_ok());
        assert!(phi_encoding(9, 6, 1, 3).is_err());
    }
}
