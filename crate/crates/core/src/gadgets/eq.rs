//! Equality gadgets: all portals covered the same number of times.

use super::{neq::cneq1_base_for, neq_gadget, Assembly, Coherence, Gadget, GadgetContext};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::relations::rel_eq;

/// The `CNEQ_c` building block for a context: cliques use the built-in
/// construction for any `c`; other patterns require `c = 1` and a plugin.
fn cneq_for(c: u8, pattern: &Graph, base: Option<&Gadget>) -> Result<Gadget> {
    let d = pattern.n();
    if *pattern == Graph::complete(d) && d >= 3 {
        return neq_gadget(c, d);
    }
    if c != 1 {
        return Err(Error::Gadget(
            "CNEQ_c with c >= 2 is only available for clique patterns".into(),
        ));
    }
    cneq1_base_for(pattern, base)
}

/// `EQ_|H|^[0,c]` gadget: `c` copies of the pattern, every copy vertex guarded
/// by a `CNEQ_c` gadget whose free ends are identified across copies into the
/// portals.
pub fn eq_gadget_single(c: u8, pattern: &Graph, base: Option<&Gadget>) -> Result<Gadget> {
    let h = pattern.n();
    if h < 3 {
        return Err(Error::Gadget("pattern needs at least 3 vertices".into()));
    }
    let neq = cneq_for(c, pattern, base)?;
    let mut asm = Assembly::new();
    let portals = asm.add_vertices(h, "eq.p");
    for i in 0..c as usize {
        let copy = asm.add_vertices(h, &format!("eq.a{i}"));
        for (a, b) in pattern.edges() {
            asm.add_edge(copy[a as usize], copy[b as usize]);
        }
        for j in 0..h {
            asm.splice(&neq, &[copy[j], portals[j]], &format!("eq.t{i}.{j}"))?;
        }
    }
    let values: Vec<u8> = (0..=c).collect();
    let gadget = Gadget {
        graph: asm.build(),
        portals,
        context: GadgetContext { c, pattern: pattern.clone() },
        claimed: rel_eq(h, &values)?,
        coherent: Coherence::ClaimedCoherent,
    };
    gadget.validate()?;
    Ok(gadget)
}

/// `EQ_{k|H|}^[0,c]` ring gadget: `k|H|` positions, each holding an `A`/`B`
/// pair of `EQ_|H|` gadgets linked by `CNEQ_c` gadgets around the ring, with
/// filler `EQ_|H|` gadgets tying off the leftover portals.
pub fn eq_gadget_ring(c: u8, pattern: &Graph, k: usize, base: Option<&Gadget>) -> Result<Gadget> {
    let h = pattern.n();
    if k < 1 {
        return Err(Error::Gadget("ring needs k >= 1".into()));
    }
    let eq = eq_gadget_single(c, pattern, base)?;
    let neq = cneq_for(c, pattern, base)?;
    let m = k * h;
    let mut asm = Assembly::new();

    // Portal roles per position i: A gets [left, right, up, x_1..x_{h-3}],
    // B gets [left, right, y_1..y_{h-2}].
    let mut a_left = Vec::with_capacity(m);
    let mut a_right = Vec::with_capacity(m);
    let mut a_up = Vec::with_capacity(m);
    let mut xs: Vec<Vec<u32>> = Vec::with_capacity(m); // xs[i][j], j < h-3
    let mut b_left = Vec::with_capacity(m);
    let mut b_right = Vec::with_capacity(m);
    let mut ys: Vec<Vec<u32>> = Vec::with_capacity(m); // ys[i][j], j < h-2
    for i in 0..m {
        a_left.push(asm.add_vertex(format!("ring.al.{i}")));
        a_right.push(asm.add_vertex(format!("ring.ar.{i}")));
        a_up.push(asm.add_vertex(format!("ring.au.{i}")));
        xs.push(asm.add_vertices(h - 3, &format!("ring.x.{i}")));
        b_left.push(asm.add_vertex(format!("ring.bl.{i}")));
        b_right.push(asm.add_vertex(format!("ring.br.{i}")));
        ys.push(asm.add_vertices(h - 2, &format!("ring.y.{i}")));
    }
    for i in 0..m {
        let mut a_ports = vec![a_left[i], a_right[i], a_up[i]];
        a_ports.extend(&xs[i]);
        asm.splice(&eq, &a_ports, &format!("ring.A{i}"))?;
        let mut b_ports = vec![b_left[i], b_right[i]];
        b_ports.extend(&ys[i]);
        asm.splice(&eq, &b_ports, &format!("ring.B{i}"))?;
        asm.splice(&neq, &[a_right[i], b_left[i]], &format!("ring.L{i}"))?;
        asm.splice(&neq, &[b_right[i], a_left[(i + 1) % m]], &format!("ring.R{i}"))?;
    }
    // Fillers: consecutive groups of size h over each x column and y column.
    for j in 0..h.saturating_sub(3) {
        for g in 0..k {
            let group: Vec<u32> = (0..h).map(|t| xs[g * h + t][j]).collect();
            asm.splice(&eq, &group, &format!("ring.fx{j}.{g}"))?;
        }
    }
    for j in 0..h - 2 {
        for g in 0..k {
            let group: Vec<u32> = (0..h).map(|t| ys[g * h + t][j]).collect();
            asm.splice(&eq, &group, &format!("ring.fy{j}.{g}"))?;
        }
    }
    let values: Vec<u8> = (0..=c).collect();
    let gadget = Gadget {
        graph: asm.build(),
        portals: a_up,
        context: GadgetContext { c, pattern: pattern.clone() },
        claimed: rel_eq(m, &values)?,
        coherent: Coherence::ClaimedCoherent,
    };
    gadget.validate()?;
    Ok(gadget)
}

/// Number of filler gadgets the ring construction uses, exposed for audits.
pub(crate) fn ring_filler_count(h: usize, k: usize) -> usize {
    h.saturating_sub(3) * k + (h - 2) * k
}
