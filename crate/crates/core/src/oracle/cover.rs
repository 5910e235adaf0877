//! Exact-coverage search: packings whose coverage hits per-vertex targets.
//!
//! One engine powers both exact-cover feasibility (all coverage counts fixed)
//! and realized-relation extraction (internal vertices fixed to `c`, portal
//! vertices free in `[0, c]`, every achievable portal vector collected).
//!
//! Branching discipline: pick the unsatisfied vertex with the fewest usable
//! copy slots and enumerate the complete multisets of copies that close its
//! deficit. Once a vertex is satisfied no later copy may touch it, so each
//! packing is generated exactly once.

use super::{Budget, DemandMap, PackingVariant};
use crate::error::{Error, Result};
use crate::gadgets::Gadget;
use crate::graph::{enumerate_copies, Copy, Graph};
use crate::relations::Relation;
use std::collections::BTreeSet;

struct CoverSearch<'a> {
    copies: &'a [Copy],
    cand: Vec<Vec<usize>>,
    lo: Vec<u8>,
    hi: Vec<u8>,
    cover: Vec<u8>,
    used: Vec<u8>,
    max_mult: u8,
    deficit_total: u64,
    portals: &'a [u32],
    vectors: BTreeSet<Vec<u8>>,
    first_witness: Option<Vec<(usize, u8)>>,
    stop_at_first: bool,
}

enum Found {
    Stop,
    Continue,
}

impl CoverSearch<'_> {
    fn slots(&self, v: usize, cap: u64) -> u64 {
        let mut total = 0u64;
        for &i in &self.cand[v] {
            total += self.copy_avail(i) as u64;
            if total >= cap {
                return total;
            }
        }
        total
    }

    fn copy_avail(&self, i: usize) -> u8 {
        let mut a = self.max_mult.saturating_sub(self.used[i]);
        for &v in &self.copies[i].vertices {
            a = a.min(self.hi[v as usize] - self.cover[v as usize]);
            if a == 0 {
                return 0;
            }
        }
        a
    }

    fn apply(&mut self, i: usize, m: u8) {
        for &v in &self.copies[i].vertices {
            let v = v as usize;
            let before = self.lo[v].saturating_sub(self.cover[v]);
            self.cover[v] += m;
            let after = self.lo[v].saturating_sub(self.cover[v]);
            self.deficit_total -= (before - after) as u64;
        }
        self.used[i] += m;
    }

    fn undo(&mut self, i: usize, m: u8) {
        for &v in &self.copies[i].vertices {
            let v = v as usize;
            let before = self.lo[v].saturating_sub(self.cover[v]);
            self.cover[v] -= m;
            let after = self.lo[v].saturating_sub(self.cover[v]);
            self.deficit_total += (after - before) as u64;
        }
        self.used[i] -= m;
    }

    fn run(&mut self, budget: &mut Budget) -> Result<Found> {
        budget.tick()?;
        if self.deficit_total == 0 {
            return self.on_solution(budget);
        }
        // Most constrained unsatisfied vertex; slot counts capped, with
        // immediate failure on 0 and forced branching on tight vertices.
        let mut best_v = usize::MAX;
        let mut best_slots = u64::MAX;
        for v in 0..self.lo.len() {
            let deficit = self.lo[v].saturating_sub(self.cover[v]) as u64;
            if deficit == 0 {
                continue;
            }
            let s = self.slots(v, deficit.max(2) + 1);
            if s < deficit {
                return Ok(Found::Continue); // dead branch
            }
            if s < best_slots {
                best_slots = s;
                best_v = v;
                if s == deficit {
                    break; // forced
                }
            }
        }
        let v = best_v;
        let deficit = self.lo[v] - self.cover[v];
        let cands = self.cand[v].clone();
        self.branch_vertex(v, deficit, &cands, 0, budget)
    }

    /// Enumerates multisets over `cands[from..]` summing to `deficit`, applying
    /// each and recursing into the main search.
    fn branch_vertex(
        &mut self,
        v: usize,
        deficit: u8,
        cands: &[usize],
        from: usize,
        budget: &mut Budget,
    ) -> Result<Found> {
        if deficit == 0 {
            return self.run(budget);
        }
        for k in from..cands.len() {
            let i = cands[k];
            let a = self.copy_avail(i).min(deficit);
            for m in (1..=a).rev() {
                self.apply(i, m);
                let r = self.branch_vertex(v, deficit - m, cands, k + 1, budget)?;
                self.undo(i, m);
                if let Found::Stop = r {
                    return Ok(Found::Stop);
                }
            }
        }
        Ok(Found::Continue)
    }

    fn on_solution(&mut self, budget: &mut Budget) -> Result<Found> {
        let vector: Vec<u8> = self.portals.iter().map(|&p| self.cover[p as usize]).collect();
        self.vectors.insert(vector);
        if self.first_witness.is_none() {
            self.first_witness = Some(
                self.used
                    .iter()
                    .enumerate()
                    .filter(|(_, &m)| m > 0)
                    .map(|(i, &m)| (i, m))
                    .collect(),
            );
        }
        if self.stop_at_first {
            return Ok(Found::Stop);
        }
        // Extend by copies that touch no deficit-carrying vertex (possible
        // only through all-portal copies); each extension is a solution too.
        self.extend(0, budget)
    }

    fn extend(&mut self, from: usize, budget: &mut Budget) -> Result<Found> {
        budget.tick()?;
        for i in from..self.copies.len() {
            let a = self.copy_avail(i);
            for m in 1..=a {
                self.apply(i, m);
                let vector: Vec<u8> =
                    self.portals.iter().map(|&p| self.cover[p as usize]).collect();
                self.vectors.insert(vector);
                let r = self.extend(i + 1, budget)?;
                self.undo(i, m);
                if let Found::Stop = r {
                    return Ok(Found::Stop);
                }
            }
        }
        Ok(Found::Continue)
    }
}

fn build_search<'a>(
    g: &Graph,
    copies: &'a [Copy],
    lo: Vec<u8>,
    hi: Vec<u8>,
    portals: &'a [u32],
    variant: PackingVariant,
    c: u8,
    stop_at_first: bool,
) -> CoverSearch<'a> {
    let mut cand = vec![Vec::new(); g.n()];
    for (i, copy) in copies.iter().enumerate() {
        for &v in &copy.vertices {
            cand[v as usize].push(i);
        }
    }
    let deficit_total = lo.iter().map(|&x| x as u64).sum();
    CoverSearch {
        copies,
        cand,
        lo,
        hi,
        cover: vec![0; g.n()],
        used: vec![0; copies.len()],
        max_mult: match variant {
            PackingVariant::Dist => 1,
            PackingVariant::Arb => c,
        },
        deficit_total,
        portals,
        vectors: BTreeSet::new(),
        first_witness: None,
        stop_at_first,
    }
}

/// True iff some `variant` packing covers every vertex exactly
/// `demand.demand[v]` times; also returns a witness when feasible.
pub fn exact_cover_feasible(
    g: &Graph,
    h: &Graph,
    demand: &DemandMap,
    variant: PackingVariant,
    budget: &mut Budget,
) -> Result<(bool, Option<Vec<(Copy, u8)>>)> {
    assert_eq!(demand.demand.len(), g.n());
    let copies = enumerate_copies(g, h)?;
    let c = demand.demand.iter().copied().max().unwrap_or(0);
    let mut search = build_search(
        g,
        &copies,
        demand.demand.clone(),
        demand.demand.clone(),
        &[],
        variant,
        c,
        true,
    );
    search.run(budget)?;
    match search.first_witness.take() {
        Some(w) => {
            let witness = w.into_iter().map(|(i, m)| (copies[i].clone(), m)).collect();
            Ok((true, Some(witness)))
        }
        None => Ok((false, None)),
    }
}

/// The set of portal coverage vectors achievable by `variant` packings of the
/// gadget graph that cover every internal vertex exactly `c` times.
pub fn realized_relation_of_parts(
    graph: &Graph,
    portals: &[u32],
    pattern: &Graph,
    c: u8,
    variant: PackingVariant,
    budget: &mut Budget,
) -> Result<Relation> {
    let copies = enumerate_copies(graph, pattern)?;
    let is_portal: Vec<bool> = {
        let mut p = vec![false; graph.n()];
        for &v in portals {
            p[v as usize] = true;
        }
        p
    };
    let lo: Vec<u8> = (0..graph.n()).map(|v| if is_portal[v] { 0 } else { c }).collect();
    let hi = vec![c; graph.n()];
    let mut search = build_search(graph, &copies, lo, hi, portals, variant, c, false);
    search.run(budget)?;
    Relation::new(portals.len(), c, search.vectors)
}

/// Realized relation of a gadget under the chosen variant.
pub fn realized_relation(
    gadget: &Gadget,
    variant: PackingVariant,
    budget: &mut Budget,
) -> Result<Relation> {
    realized_relation_of_parts(
        &gadget.graph,
        &gadget.portals,
        &gadget.context.pattern,
        gadget.context.c,
        variant,
        budget,
    )
}

/// Comparison of the realized relations against the claim, both variants.
#[derive(Debug, Clone)]
pub struct GadgetReport {
    pub dist_ok: bool,
    pub arb_ok: bool,
    pub dist_missing: Vec<Vec<u8>>,
    pub dist_extra: Vec<Vec<u8>>,
    pub arb_missing: Vec<Vec<u8>>,
    pub arb_extra: Vec<Vec<u8>>,
}

impl GadgetReport {
    pub fn ok(&self) -> bool {
        self.dist_ok && self.arb_ok
    }
}

/// Verifies a gadget's claimed relation under both variants and reports the
/// tuple-level diffs. Also checks the containment of the distinct-copy
/// realization in the multiset realization.
pub fn verify_gadget(gadget: &Gadget, budget: &mut Budget) -> Result<GadgetReport> {
    let dist = realized_relation(gadget, PackingVariant::Dist, budget)?;
    let arb = realized_relation(gadget, PackingVariant::Arb, budget)?;
    if !dist.tuples.is_subset(&arb.tuples) {
        return Err(Error::Gadget(
            "distinct-copy realization not contained in multiset realization".into(),
        ));
    }
    let claimed = &gadget.claimed;
    let diff = |a: &Relation, b: &Relation| -> Vec<Vec<u8>> {
        a.tuples.difference(&b.tuples).cloned().collect()
    };
    Ok(GadgetReport {
        dist_ok: dist == *claimed,
        arb_ok: arb == *claimed,
        dist_missing: diff(claimed, &dist),
        dist_extra: diff(&dist, claimed),
        arb_missing: diff(claimed, &arb),
        arb_extra: diff(&arb, claimed),
    })
}
