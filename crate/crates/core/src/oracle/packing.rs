//! Exact maximum packing by branch and bound over the copy list.

use super::{Budget, PackingVariant};
use crate::error::Result;
use crate::graph::{enumerate_copies, Copy, Graph};
use serde::{Deserialize, Serialize};

/// A packing witness: copies with multiplicities, for audit.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PackingWitness {
    pub copies: Vec<(Copy, u8)>,
}

impl PackingWitness {
    pub fn size(&self) -> usize {
        self.copies.iter().map(|(_, m)| *m as usize).sum()
    }

    /// Independent validity check: every listed copy is a copy of `h` in `g`,
    /// coverage stays within `c`, and dist-mode multiplicities are 1.
    pub fn check(&self, g: &Graph, h: &Graph, c: u8, variant: PackingVariant) -> bool {
        let mut cover = vec![0u32; g.n()];
        for (copy, mult) in &self.copies {
            if *mult == 0 {
                return false;
            }
            if variant == PackingVariant::Dist && *mult != 1 {
                return false;
            }
            if copy.vertices.len() != h.n() || copy.edges.len() != h.m() {
                return false;
            }
            for &(u, v) in &copy.edges {
                if !g.has_edge(u as usize, v as usize) {
                    return false;
                }
            }
            // The witness map must be an isomorphism onto the edge subset.
            let mut mapped: Vec<(u32, u32)> = h
                .edges()
                .map(|(a, b)| {
                    let (x, y) = (copy.witness[a as usize], copy.witness[b as usize]);
                    (x.min(y), x.max(y))
                })
                .collect();
            mapped.sort_unstable();
            if mapped != copy.edges {
                return false;
            }
            for &v in &copy.vertices {
                cover[v as usize] += *mult as u32;
            }
        }
        if variant == PackingVariant::Dist {
            let mut seen = std::collections::BTreeSet::new();
            for (copy, _) in &self.copies {
                if !seen.insert((copy.vertices.clone(), copy.edges.clone())) {
                    return false;
                }
            }
        }
        cover.iter().all(|&x| x <= c as u32)
    }
}

struct Search<'a> {
    copies: &'a [Copy],
    c: u8,
    variant: PackingVariant,
    cover: Vec<u8>,
    slack: u64,
    h_size: u64,
    best: usize,
    best_mults: Vec<u8>,
    mults: Vec<u8>,
    value: usize,
}

impl Search<'_> {
    fn avail(&self, i: usize) -> u8 {
        let cap = self.copies[i]
            .vertices
            .iter()
            .map(|&v| self.c - self.cover[v as usize])
            .min()
            .unwrap_or(0);
        match self.variant {
            PackingVariant::Dist => cap.min(1),
            PackingVariant::Arb => cap,
        }
    }

    fn apply(&mut self, i: usize, m: u8) {
        for &v in &self.copies[i].vertices {
            self.cover[v as usize] += m;
        }
        self.slack -= m as u64 * self.copies[i].vertices.len() as u64;
        self.mults[i] = m;
        self.value += m as usize;
    }

    fn undo(&mut self, i: usize, m: u8) {
        for &v in &self.copies[i].vertices {
            self.cover[v as usize] -= m;
        }
        self.slack += m as u64 * self.copies[i].vertices.len() as u64;
        self.mults[i] = 0;
        self.value -= m as usize;
    }

    fn run(&mut self, i: usize, budget: &mut Budget) -> Result<()> {
        budget.tick()?;
        if self.value > self.best {
            self.best = self.value;
            self.best_mults = self.mults.clone();
        }
        if i == self.copies.len() {
            return Ok(());
        }
        // Capacity bound: every further copy consumes h_size coverage slots.
        if self.value as u64 + self.slack / self.h_size <= self.best as u64 {
            return Ok(());
        }
        let max_m = self.avail(i);
        // Take the copy as often as possible first; this finds good solutions
        // early and tightens the bound.
        for m in (0..=max_m).rev() {
            self.apply(i, m);
            self.run(i + 1, budget)?;
            self.undo(i, m);
        }
        Ok(())
    }
}

/// Exact maximum `c`-variant `h`-packing of `g` plus a witness.
pub fn max_packing_bruteforce(
    g: &Graph,
    h: &Graph,
    c: u8,
    variant: PackingVariant,
    budget: &mut Budget,
) -> Result<(usize, PackingWitness)> {
    let copies = enumerate_copies(g, h)?;
    if copies.is_empty() || h.n() == 0 {
        return Ok((0, PackingWitness { copies: Vec::new() }));
    }
    let mut search = Search {
        copies: &copies,
        c,
        variant,
        cover: vec![0; g.n()],
        slack: (g.n() as u64) * (c as u64),
        h_size: h.n() as u64,
        best: 0,
        best_mults: vec![0; copies.len()],
        mults: vec![0; copies.len()],
        value: 0,
    };
    search.run(0, budget)?;
    let witness = PackingWitness {
        copies: copies
            .iter()
            .zip(&search.best_mults)
            .filter(|(_, &m)| m > 0)
            .map(|(copy, &m)| (copy.clone(), m))
            .collect(),
    };
    Ok((search.best, witness))
}
