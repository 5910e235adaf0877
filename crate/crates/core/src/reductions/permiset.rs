//! Permutation independent set to H-partition, for patterns with a
//! non-clique block: one column of separator copies per edge of the source
//! instance, with selector gadgets propagating a permutation along the
//! columns and one gadget per edge forbidding its cell pair.

use super::ReductionOutput;
use crate::error::{Error, Result};
use crate::gadgets::{arb_relation_gadget, Assembly, Gadget};
use crate::graph::Graph;
use crate::relations::{rel_sel, rel_sel_full, Relation};
use crate::treedec::TreeDecomposition;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A `k x k` permutation independent set instance; cell `(i, j)` is vertex
/// `i * k + j` of the graph.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PermIsetInstance {
    pub k: usize,
    pub graph: Graph,
}

impl PermIsetInstance {
    pub fn validate(&self) -> Result<()> {
        if self.graph.n() != self.k * self.k {
            return Err(Error::Reduction(format!(
                "graph has {} vertices, expected k^2 = {}",
                self.graph.n(),
                self.k * self.k
            )));
        }
        Ok(())
    }

    /// Edges as cell pairs, row-sorted.
    pub fn edges_cells(&self) -> Vec<((usize, usize), (usize, usize))> {
        let k = self.k;
        self.graph
            .edges()
            .map(|(a, b)| {
                let (a, b) = (a as usize, b as usize);
                let ca = (a / k, a % k);
                let cb = (b / k, b % k);
                if ca.0 <= cb.0 {
                    (ca, cb)
                } else {
                    (cb, ca)
                }
            })
            .collect()
    }
}

/// Pattern structure the construction hangs on: the minimum separator of a
/// non-clique block split into `U`/`D`, and the components of `H - S`.
struct PatternSplit {
    u_part: Vec<usize>,
    d_part: Vec<usize>,
    components: Vec<Vec<usize>>,
}

fn split_pattern(h: &Graph) -> Result<PatternSplit> {
    if h.n() < 3 || !h.is_connected() {
        return Err(Error::Reduction("pattern must be connected with >= 3 vertices".into()));
    }
    if h.is_block_graph() {
        return Err(Error::Reduction(
            "pattern is a block graph; the construction needs a non-clique block".into(),
        ));
    }
    // Non-clique block with the smallest minimum separator; ties broken by
    // lexicographic separator.
    let dec = h.blocks();
    let mut best: Option<Vec<usize>> = None;
    for block in &dec.blocks {
        let clique = block
            .iter()
            .all(|&u| block.iter().all(|&v| u == v || h.has_edge(u, v)));
        if clique {
            continue;
        }
        let sep = h.min_block_separator(block)?;
        match &best {
            Some(b) if (b.len(), &b[..]) <= (sep.len(), &sep[..]) => {}
            _ => best = Some(sep),
        }
    }
    let sep = best.expect("non-block-graph has a non-clique block");
    // First half (by sorted id) to U, rest to D.
    let mid = sep.len().div_ceil(2);
    let u_part = sep[..mid].to_vec();
    let d_part = sep[mid..].to_vec();
    let rest: Vec<usize> = (0..h.n()).filter(|v| !sep.contains(v)).collect();
    let mut components = h.components_within(&rest);
    components.sort();
    if components.len() < 2 {
        return Err(Error::Reduction("separator does not disconnect the pattern".into()));
    }
    Ok(PatternSplit { u_part, d_part, components })
}

/// Selector relation minus one forbidden block choice.
fn sel_minus(parts: &[Vec<usize>], x: usize, y: usize, forbidden: &[usize]) -> Result<Relation> {
    let full = rel_sel(parts, x, y)?;
    let mut tuple = vec![1u8; x * y];
    for &w in forbidden {
        for t in 0..y {
            tuple[(w - 1) * y + t] = 0;
        }
    }
    let mut tuples = full.tuples.clone();
    if !tuples.remove(&tuple) {
        return Err(Error::Reduction("forbidden tuple not in selector relation".into()));
    }
    if tuples.is_empty() {
        return Err(Error::Reduction("selector relation became empty".into()));
    }
    Relation::new(x * y, 1, tuples)
}

pub struct PermIsetReductionData {
    pub output: ReductionOutput,
    /// Relations instantiated, by gadget name, for the verification cache.
    pub gadget_relations: Vec<(String, Relation)>,
    pub emitted_width: usize,
}

pub fn reduce_permiset_to_hpartition(
    inst: &PermIsetInstance,
    h: &Graph,
    base: Option<&Gadget>,
) -> Result<PermIsetReductionData> {
    inst.validate()?;
    let split = split_pattern(h)?;
    let k = inst.k;
    let edges = inst.edges_cells();
    if edges.is_empty() {
        return Err(Error::Reduction(
            "instance has no edges; it is trivially satisfiable and the column construction is undefined".into(),
        ));
    }
    let m = edges.len();
    let t = split.components.len();
    let c1_len = split.components[0].len();
    let ct_len = split.components[t - 1].len();

    let mut asm = Assembly::new();
    let mut certificate = BTreeMap::new();
    let mut u_copy: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut d_copy: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut x_copy: BTreeMap<(usize, usize, usize, usize), Vec<u32>> = BTreeMap::new();
    for s in 0..m {
        let mut us = Vec::new();
        let mut ds = Vec::new();
        for i in 0..k {
            let ids = asm.add_vertices(split.u_part.len(), &format!("U.{s}.{i}"));
            certificate.insert(format!("U.{s}.{i}"), ids.clone());
            us.push(ids);
            let ids = asm.add_vertices(split.d_part.len(), &format!("D.{s}.{i}"));
            certificate.insert(format!("D.{s}.{i}"), ids.clone());
            ds.push(ids);
        }
        u_copy.push(us);
        d_copy.push(ds);
        for (l, comp) in split.components.iter().enumerate() {
            for i in 0..k {
                for j in 0..k {
                    let ids = asm.add_vertices(comp.len(), &format!("X.{l}.{s}.{i}.{j}"));
                    certificate.insert(format!("X.{l}.{s}.{i}.{j}"), ids.clone());
                    x_copy.insert((l, s, i, j), ids);
                }
            }
        }
    }
    // Pattern edges per (s, i, j): H vertices map to the U copy of row i, the
    // D copy of column j, or the component copy for that cell.
    let locate = |s: usize, i: usize, j: usize, v: usize| -> u32 {
        if let Some(pos) = split.u_part.iter().position(|&u| u == v) {
            return u_copy[s][i][pos];
        }
        if let Some(pos) = split.d_part.iter().position(|&u| u == v) {
            return d_copy[s][j][pos];
        }
        for (l, comp) in split.components.iter().enumerate() {
            if let Some(pos) = comp.iter().position(|&u| u == v) {
                return x_copy[&(l, s, i, j)][pos];
            }
        }
        unreachable!("pattern vertex {v} not located");
    };
    for s in 0..m {
        for i in 0..k {
            for j in 0..k {
                for (a, b) in h.edges() {
                    let (va, vb) = (locate(s, i, j, a as usize), locate(s, i, j, b as usize));
                    if va != vb {
                        asm.add_edge(va, vb);
                    }
                }
            }
        }
    }

    let x_row = |x_copy: &BTreeMap<(usize, usize, usize, usize), Vec<u32>>,
                 l: usize,
                 s: usize,
                 i: usize|
     -> Vec<u32> { (0..k).flat_map(|j| x_copy[&(l, s, i, j)].clone()).collect() };
    let x_pair_row = |x_copy: &BTreeMap<(usize, usize, usize, usize), Vec<u32>>,
                      s: usize,
                      i: usize|
     -> Vec<u32> {
        (0..k)
            .flat_map(|j| {
                let mut v = x_copy[&(t - 1, s, i, j)].clone();
                v.extend(&x_copy[&(0, s + 1, i, j)]);
                v
            })
            .collect()
    };

    let mut gadget_relations: Vec<(String, Relation)> = Vec::new();
    let build = |asm: &mut Assembly,
                     name: String,
                     rel: Relation,
                     targets: &[u32],
                     gadget_relations: &mut Vec<(String, Relation)>|
     -> Result<Vec<u32>> {
        let gadget = arb_relation_gadget(h, &rel, base)?;
        gadget_relations.push((name.clone(), rel));
        let map = asm.splice(&gadget, targets, &name)?;
        Ok(map.into_iter().filter(|v| !targets.contains(v)).collect())
    };

    let col_bag = |u_copy: &[Vec<Vec<u32>>], d_copy: &[Vec<Vec<u32>>], s: usize| -> Vec<u32> {
        let mut bag = Vec::new();
        for i in 0..k {
            bag.extend(&u_copy[s][i]);
            bag.extend(&d_copy[s][i]);
        }
        bag
    };
    let mut bags: Vec<Vec<u32>> = Vec::new();

    // Column 0 boundary: A_i selector per row on the first component.
    for i in 0..k {
        let rel = rel_sel_full(k, c1_len)?;
        let targets = x_row(&x_copy, 0, 0, i);
        let internals = build(&mut asm, format!("A.{i}"), rel, &targets, &mut gadget_relations)?;
        let mut bag = col_bag(&u_copy, &d_copy, 0);
        bag.extend(&targets);
        bag.extend(internals);
        bags.push(bag);
    }
    // Middle-component selectors for column s, emitted with that column.
    let emit_q = |asm: &mut Assembly,
                      bags: &mut Vec<Vec<u32>>,
                      gadget_relations: &mut Vec<(String, Relation)>,
                      s: usize|
     -> Result<()> {
        for l in 1..t - 1 {
            for i in 0..k {
                let rel = rel_sel_full(k, split.components[l].len())?;
                let targets = x_row(&x_copy, l, s, i);
                let gadget = arb_relation_gadget(h, &rel, base)?;
                gadget_relations.push((format!("Q.{l}.{s}.{i}"), rel));
                let map = asm.splice(&gadget, &targets, &format!("Q.{l}.{s}.{i}"))?;
                let mut bag = col_bag(&u_copy, &d_copy, s);
                bag.extend(&targets);
                bag.extend(map.into_iter().filter(|v| !targets.contains(v)));
                bags.push(bag);
            }
        }
        Ok(())
    };
    emit_q(&mut asm, &mut bags, &mut gadget_relations, 0)?;
    bags.push(col_bag(&u_copy, &d_copy, 0));

    // Transitions s -> s+1: selectors bridging the last component of column s
    // to the first of column s+1; the Z gadget excludes edge s's cell pair.
    // Edges within one row or one column cannot be picked by a permutation,
    // so those transitions carry plain selectors on every row.
    for s in 0..m - 1 {
        let ((is_, js_), (ip_, jp_)) = edges[s];
        let constraining = is_ != ip_ && js_ != jp_;
        for i in 0..k {
            if constraining && (i == is_ || i == ip_) {
                continue;
            }
            let rel = rel_sel_full(k, ct_len + c1_len)?;
            let targets = x_pair_row(&x_copy, s, i);
            let internals =
                build(&mut asm, format!("K.{s}.{i}"), rel, &targets, &mut gadget_relations)?;
            let mut bag = col_bag(&u_copy, &d_copy, s);
            bag.extend(col_bag(&u_copy, &d_copy, s + 1));
            bag.extend(&targets);
            bag.extend(internals);
            bags.push(bag);
        }
        if constraining {
            let parts: Vec<Vec<usize>> = vec![(1..=k).collect(), (k + 1..=2 * k).collect()];
            let rel = sel_minus(&parts, 2 * k, ct_len + c1_len, &[js_ + 1, k + jp_ + 1])?;
            let mut targets = x_pair_row(&x_copy, s, is_);
            targets.extend(x_pair_row(&x_copy, s, ip_));
            let internals =
                build(&mut asm, format!("Z.{s}"), rel, &targets, &mut gadget_relations)?;
            let mut bag = col_bag(&u_copy, &d_copy, s);
            bag.extend(col_bag(&u_copy, &d_copy, s + 1));
            bag.extend(&targets);
            bag.extend(internals);
            bags.push(bag);
        }
        emit_q(&mut asm, &mut bags, &mut gadget_relations, s + 1)?;
        bags.push(col_bag(&u_copy, &d_copy, s + 1));
    }

    // Final column boundary: E_i selectors on the last component, and the F
    // gadget excluding the last edge's cell pair.
    let s_last = m - 1;
    let ((is_, js_), (ip_, jp_)) = edges[s_last];
    let constraining = is_ != ip_ && js_ != jp_;
    for i in 0..k {
        if constraining && (i == is_ || i == ip_) {
            continue;
        }
        let rel = rel_sel_full(k, ct_len)?;
        let targets = x_row(&x_copy, t - 1, s_last, i);
        let internals =
            build(&mut asm, format!("E.{i}"), rel, &targets, &mut gadget_relations)?;
        let mut bag = col_bag(&u_copy, &d_copy, s_last);
        bag.extend(&targets);
        bag.extend(internals);
        bags.push(bag);
    }
    if constraining {
        let parts: Vec<Vec<usize>> = vec![(1..=k).collect(), (k + 1..=2 * k).collect()];
        let rel = sel_minus(&parts, 2 * k, ct_len, &[js_ + 1, k + jp_ + 1])?;
        let mut targets = x_row(&x_copy, t - 1, s_last, is_);
        targets.extend(x_row(&x_copy, t - 1, s_last, ip_));
        let internals = build(&mut asm, "F".into(), rel, &targets, &mut gadget_relations)?;
        let mut bag = col_bag(&u_copy, &d_copy, s_last);
        bag.extend(&targets);
        bag.extend(internals);
        bags.push(bag);
    }

    let graph = asm.build();
    let decomposition = TreeDecomposition::path(bags);
    decomposition
        .validate(&graph)
        .map_err(|v| Error::InvalidDecomposition(format!("emitted decomposition: {v}")))?;
    let emitted_width = decomposition.width();
    Ok(PermIsetReductionData {
        output: ReductionOutput { graph, decomposition, certificate },
        gadget_relations,
        emitted_width,
    })
}
