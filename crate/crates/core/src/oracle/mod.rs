//! Exhaustive ground-truth solvers: exact maximum packings, exact-coverage
//! feasibility, realized-relation extraction, and brute-force deciders for
//! binary CSPs and permutation independent sets.
//!
//! Every search carries an explicit node budget and errors out instead of
//! returning an approximate answer.

mod cover;
mod csp;
mod packing;
mod permiset;

pub use cover::{
    exact_cover_feasible, realized_relation, realized_relation_of_parts, verify_gadget,
    GadgetReport,
};
pub use csp::csp_bruteforce;
pub use packing::{max_packing_bruteforce, PackingWitness};
pub use permiset::permiset_bruteforce;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

/// Whether a packing is a set of distinct copies or a multiset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PackingVariant {
    /// Set semantics: each copy used at most once.
    Dist,
    /// Multiset semantics: copies may repeat, bounded by coverage.
    Arb,
}

/// Per-vertex required coverage for exact-cover queries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DemandMap {
    pub demand: Vec<u8>,
}

impl DemandMap {
    pub fn uniform(n: usize, c: u8) -> Self {
        DemandMap { demand: vec![c; n] }
    }
}

/// Cooperative search budget: a node-count limit plus an optional external
/// cancellation flag checked as the search runs.
#[derive(Debug, Clone)]
pub struct Budget {
    pub max_nodes: u64,
    used: u64,
    cancel: Option<Arc<AtomicBool>>,
}

impl Budget {
    pub fn new(max_nodes: u64) -> Self {
        Budget { max_nodes, used: 0, cancel: None }
    }

    pub fn with_cancel(mut self, flag: Arc<AtomicBool>) -> Self {
        self.cancel = Some(flag);
        self
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.max_nodes {
            return Err(Error::BudgetExceeded(self.used));
        }
        if self.used % 1024 == 0 {
            if let Some(flag) = &self.cancel {
                if flag.load(Ordering::Relaxed) {
                    return Err(Error::Cancelled);
                }
            }
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(50_000_000)
    }
}
