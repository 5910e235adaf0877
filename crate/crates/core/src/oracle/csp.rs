//! Brute-force satisfiability for binary CSPs over alphabet `[B]`.

use super::Budget;
use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Exhaustive check over all `B^n` assignments. Values range over `1..=B`.
pub fn csp_bruteforce(
    n_vars: usize,
    alphabet: u64,
    constraints: &[(usize, usize, BTreeSet<(u64, u64)>)],
    budget: &mut Budget,
) -> Result<bool> {
    for &(i, j, _) in constraints {
        if i >= n_vars || j >= n_vars {
            return Err(Error::Reduction(format!("constraint on unknown variable ({i},{j})")));
        }
    }
    let mut assign = vec![1u64; n_vars];
    loop {
        budget.tick()?;
        let ok = constraints
            .iter()
            .all(|(i, j, allowed)| allowed.contains(&(assign[*i], assign[*j])));
        if ok {
            return Ok(true);
        }
        // next assignment
        let mut pos = 0;
        loop {
            if pos == n_vars {
                return Ok(false);
            }
            if assign[pos] < alphabet {
                assign[pos] += 1;
                break;
            }
            assign[pos] = 1;
            pos += 1;
        }
    }
}
