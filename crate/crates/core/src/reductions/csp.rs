//! Binary CSP to multiset clique partition: every variable is a column of
//! `l` vertices per decomposition step whose coverage pattern encodes its
//! value; relation gadgets propagate the pattern along the path and enforce
//! the constraints.

use super::{choose_ell, phi_encoding, ReductionOutput};
use crate::error::{Error, Result};
use crate::gadgets::{clique_reg_relation_gadget, Assembly, Gadget};
use crate::graph::Graph;
use crate::oracle::{csp_bruteforce, Budget};
use crate::relations::{concat, Relation};
use crate::treedec::TreeDecomposition;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Csp2Constraint {
    pub i: usize,
    pub j: usize,
    /// Allowed value pairs, 1-indexed over the alphabet.
    pub allowed: BTreeSet<(u64, u64)>,
}

/// A binary CSP with a path decomposition of its primal graph: bags list
/// variable indices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Csp2Instance {
    pub n_vars: usize,
    pub alphabet: u64,
    pub constraints: Vec<Csp2Constraint>,
    pub pathdec: Vec<Vec<u32>>,
}

impl Csp2Instance {
    pub fn primal_graph(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self
            .constraints
            .iter()
            .filter(|cst| cst.i != cst.j)
            .map(|cst| (cst.i, cst.j))
            .collect();
        Graph::new(self.n_vars, &edges)
    }

    pub fn validate(&self) -> Result<()> {
        for cst in &self.constraints {
            if cst.i >= self.n_vars || cst.j >= self.n_vars || cst.i == cst.j {
                return Err(Error::Reduction(format!(
                    "constraint on bad variable pair ({}, {})",
                    cst.i, cst.j
                )));
            }
            for &(a, b) in &cst.allowed {
                if a == 0 || a > self.alphabet || b == 0 || b > self.alphabet {
                    return Err(Error::Reduction("constraint value outside alphabet".into()));
                }
            }
        }
        let primal = self.primal_graph()?;
        let td = TreeDecomposition::path(self.pathdec.clone());
        td.validate(&primal)
            .map_err(|v| Error::InvalidDecomposition(format!("primal decomposition: {v}")))
    }

    pub fn bruteforce(&self, budget: &mut Budget) -> Result<bool> {
        let cs: Vec<(usize, usize, BTreeSet<(u64, u64)>)> = self
            .constraints
            .iter()
            .map(|c| (c.i, c.j, c.allowed.clone()))
            .collect();
        csp_bruteforce(self.n_vars, self.alphabet, &cs, budget)
    }
}

/// Result of the CSP reduction. A constraint with an empty allowed set makes
/// the instance unsatisfiable by construction (a gadget for the empty
/// relation has no realizing packing), so no graph is emitted.
#[derive(Debug)]
pub enum CspReductionResult {
    UnsatByConstruction,
    Instance(Box<CspInstanceData>),
}

/// The emitted instance plus the audit data the acceptance checks need.
#[derive(Debug)]
pub struct CspInstanceData {
    pub output: ReductionOutput,
    pub ell: usize,
    pub c: u8,
    pub d: usize,
    /// Relations instantiated per gadget, with names, for regularity audits.
    pub relations: Vec<(String, Relation)>,
    /// Largest gadget vertex count: the constant in the bag-size law.
    pub max_gadget_size: usize,
    /// Width of the input path decomposition (primal graph).
    pub primal_width: usize,
    /// Total a-vertex count.
    pub column_vertices: usize,
}

/// Per-variable first/last bag on the expanded bag sequence, plus the
/// injective constraint-to-bag assignment (duplicated bags make it injective,
/// each hosting one constraint with both variables present).
fn assign_bags(psi: &Csp2Instance) -> Result<(Vec<Vec<u32>>, Vec<usize>)> {
    let mut host: Vec<usize> = Vec::with_capacity(psi.constraints.len());
    for (s, cst) in psi.constraints.iter().enumerate() {
        let b0 = psi
            .pathdec
            .iter()
            .position(|bag| {
                bag.contains(&(cst.i as u32)) && bag.contains(&(cst.j as u32))
            })
            .ok_or_else(|| {
                Error::Reduction(format!("no bag contains both variables of constraint {s}"))
            })?;
        host.push(b0);
    }
    // Expand: each original bag is replicated once per hosted constraint
    // (at least once), hosting them one by one.
    let mut bags: Vec<Vec<u32>> = Vec::new();
    let mut assignment = vec![usize::MAX; psi.constraints.len()];
    for (b0, bag) in psi.pathdec.iter().enumerate() {
        let hosted: Vec<usize> =
            (0..psi.constraints.len()).filter(|&s| host[s] == b0).collect();
        if hosted.is_empty() {
            bags.push(bag.clone());
        } else {
            for s in hosted {
                assignment[s] = bags.len();
                bags.push(bag.clone());
            }
        }
    }
    Ok((bags, assignment))
}

/// Builds the clique-partition instance. `ell_override` replaces the
/// capacity-chosen column length (it must still be a multiple of `d` with
/// enough capacity).
pub fn reduce_csp_to_multiclique(
    psi: &Csp2Instance,
    c: u8,
    d: usize,
    ell_override: Option<usize>,
) -> Result<CspReductionResult> {
    psi.validate()?;
    if d < 3 || c < 1 {
        return Err(Error::Reduction("need d >= 3 and c >= 1".into()));
    }
    if psi.constraints.iter().any(|cst| cst.allowed.is_empty()) {
        return Ok(CspReductionResult::UnsatByConstruction);
    }
    let b = psi.alphabet;
    let ell = match ell_override {
        Some(l) => {
            if l % d != 0 || l < d {
                return Err(Error::Reduction(format!("l = {l} must be a positive multiple of {d}")));
            }
            l
        }
        None => choose_ell(b, c, d),
    };
    let phi: BTreeMap<u64, Vec<u8>> = phi_encoding(b, ell, c, d)?.into_iter().collect();
    let w_rel = Relation::new(ell, c, phi.values().cloned())?;
    let wc_rel = w_rel.complement(c)?;
    let copy_rel = w_rel.copy_rel(c)?;

    let (bags, b_of) = assign_bags(psi)?;
    let t = bags.len();
    // First and last bag of each variable on the expanded sequence.
    let mut l_of = vec![usize::MAX; psi.n_vars];
    let mut r_of = vec![0usize; psi.n_vars];
    for (j, bag) in bags.iter().enumerate() {
        for &x in bag {
            let x = x as usize;
            l_of[x] = l_of[x].min(j);
            r_of[x] = r_of[x].max(j);
        }
    }

    let mut relations: Vec<(String, Relation)> = vec![
        ("W".into(), w_rel.clone()),
        ("WC".into(), wc_rel.clone()),
        ("COPY".into(), copy_rel.clone()),
    ];
    for rel in [&w_rel, &wc_rel, &copy_rel] {
        if !rel.is_regular(0, d as u64) {
            return Err(Error::Reduction("column relation lost regularity".into()));
        }
    }
    let l_gadget = clique_reg_relation_gadget(c, d, &wc_rel)?;
    let r_gadget = clique_reg_relation_gadget(c, d, &w_rel)?;
    let f_gadget = clique_reg_relation_gadget(c, d, &copy_rel)?;
    let mut n_gadgets: Vec<Gadget> = Vec::new();
    for (s, cst) in psi.constraints.iter().enumerate() {
        let mut tuples = BTreeSet::new();
        for &(u1, u2) in &cst.allowed {
            let p1 = &phi[&u1];
            let p2 = &phi[&u2];
            let q1: Vec<u8> = p1.iter().map(|&x| c - x).collect();
            let q2: Vec<u8> = p2.iter().map(|&x| c - x).collect();
            tuples.insert(concat(&concat(p1, p2), &concat(&q1, &q2)));
        }
        let r_j = Relation::new(4 * ell, c, tuples)?;
        if !r_j.is_regular(0, d as u64) {
            return Err(Error::Reduction(format!("constraint relation {s} not (0,d)-regular")));
        }
        relations.push((format!("R.{s}"), r_j.clone()));
        n_gadgets.push(clique_reg_relation_gadget(c, d, &r_j)?);
    }
    let max_gadget_size = n_gadgets
        .iter()
        .map(|g| g.graph.n())
        .chain([l_gadget.graph.n(), r_gadget.graph.n(), f_gadget.graph.n()])
        .max()
        .unwrap_or(0);

    // Column vertices a^{i,j}_x for l(i) <= j <= r(i)+1; bags are indexed
    // from 0 here, and column r(i)+1 exists past the last bag of i.
    let mut asm = Assembly::new();
    let mut cols: BTreeMap<(usize, usize), Vec<u32>> = BTreeMap::new();
    let mut certificate = BTreeMap::new();
    for i in 0..psi.n_vars {
        for j in l_of[i]..=r_of[i] + 1 {
            let ids = asm.add_vertices(ell, &format!("a.{i}.{j}"));
            certificate.insert(format!("var.{i}.col.{j}"), ids.clone());
            cols.insert((i, j), ids);
        }
    }
    let column_vertices = asm.n();

    // Emitted path decomposition: bags track one live column per variable,
    // swapping to the next column as each bridging gadget is inserted.
    let mut out_bags: Vec<Vec<u32>> = Vec::new();
    let mut cur: BTreeMap<usize, usize> = BTreeMap::new(); // var -> live column
    let cur_bag = |cur: &BTreeMap<usize, usize>, cols: &BTreeMap<(usize, usize), Vec<u32>>| {
        let mut bag: Vec<u32> = Vec::new();
        for (&i, &j) in cur {
            bag.extend(&cols[&(i, j)]);
        }
        bag
    };

    let constraint_at: BTreeMap<usize, usize> =
        b_of.iter().enumerate().map(|(s, &j)| (j, s)).collect();

    for j in 0..t {
        // Variables starting here: introduce their column and the L gadget.
        for i in 0..psi.n_vars {
            if l_of[i] == j {
                let map = asm.splice(&l_gadget, &cols[&(i, j)], &format!("L.{i}"))?;
                cur.insert(i, j);
                let mut bag = cur_bag(&cur, &cols);
                bag.extend(map.iter().filter(|v| !cols[&(i, j)].contains(v)));
                out_bags.push(bag);
            }
        }
        out_bags.push(cur_bag(&cur, &cols));
        // Bridging gadgets j -> j+1: the constraint gadget first when bag j
        // represents one, then copy gadgets for the remaining live variables.
        let mut advanced: BTreeSet<usize> = BTreeSet::new();
        if let Some(&s) = constraint_at.get(&j) {
            let (i1, i2) = (psi.constraints[s].i, psi.constraints[s].j);
            let mut targets = cols[&(i1, j)].clone();
            targets.extend(&cols[&(i2, j)]);
            targets.extend(&cols[&(i1, j + 1)]);
            targets.extend(&cols[&(i2, j + 1)]);
            let map = asm.splice(&n_gadgets[s], &targets, &format!("N.{s}"))?;
            let internals: Vec<u32> =
                map.iter().copied().filter(|v| !targets.contains(v)).collect();
            certificate.insert(format!("constraint.{s}"), internals.clone());
            let mut bag_a = cur_bag(&cur, &cols);
            bag_a.extend(&internals);
            out_bags.push(bag_a);
            cur.insert(i1, j + 1);
            cur.insert(i2, j + 1);
            let mut bag_b = cur_bag(&cur, &cols);
            bag_b.extend(&internals);
            out_bags.push(bag_b);
            out_bags.push(cur_bag(&cur, &cols));
            advanced.insert(i1);
            advanced.insert(i2);
        }
        let live: Vec<usize> = cur.keys().copied().collect();
        for i in live {
            if advanced.contains(&i) || l_of[i] > j || r_of[i] < j {
                continue;
            }
            let mut targets = cols[&(i, j)].clone();
            targets.extend(&cols[&(i, j + 1)]);
            let map = asm.splice(&f_gadget, &targets, &format!("F.{j}.{i}"))?;
            let internals: Vec<u32> =
                map.iter().copied().filter(|v| !targets.contains(v)).collect();
            let mut bag_a = cur_bag(&cur, &cols);
            bag_a.extend(&internals);
            out_bags.push(bag_a);
            cur.insert(i, j + 1);
            let mut bag_b = cur_bag(&cur, &cols);
            bag_b.extend(&internals);
            out_bags.push(bag_b);
            out_bags.push(cur_bag(&cur, &cols));
        }
        // Variables ending here: R gadget on column r(i)+1, then retire.
        for i in 0..psi.n_vars {
            if r_of[i] == j {
                let map = asm.splice(&r_gadget, &cols[&(i, j + 1)], &format!("R.{i}"))?;
                let mut bag = cur_bag(&cur, &cols);
                bag.extend(map.iter().filter(|v| !cols[&(i, j + 1)].contains(v)));
                out_bags.push(bag);
                cur.remove(&i);
            }
        }
        out_bags.push(cur_bag(&cur, &cols));
    }

    let graph = asm.build();
    let decomposition = TreeDecomposition::path(out_bags);
    decomposition
        .validate(&graph)
        .map_err(|v| Error::InvalidDecomposition(format!("emitted decomposition: {v}")))?;
    let audit = (0..psi.n_vars)
        .map(|i| ell * (r_of[i] - l_of[i] + 2))
        .sum::<usize>();
    debug_assert_eq!(audit, column_vertices);
    Ok(CspReductionResult::Instance(Box::new(CspInstanceData {
        output: ReductionOutput { graph, decomposition, certificate },
        ell,
        c,
        d,
        relations,
        max_gadget_size,
        primal_width: TreeDecomposition::path(psi.pathdec.clone()).width(),
        column_vertices,
    })))
}
