//! The two-portal gadget realizing `CNEQ_c`, and coherence wrapping.

use super::{Assembly, Coherence, Gadget, GadgetContext};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::relations::rel_cneq;

/// `CNEQ_c` gadget for cliques: `c` copies of `K_{d-1}` plus `c+1` shared
/// replacement vertices, each adjacent to all copy vertices; the last two
/// replacement vertices are the portals.
pub fn neq_gadget(c: u8, d: usize) -> Result<Gadget> {
    if d < 3 {
        return Err(Error::Gadget(format!("NEQ gadget needs cliques of size >= 3, got {d}")));
    }
    if c < 1 {
        return Err(Error::Gadget("NEQ gadget needs c >= 1".into()));
    }
    let mut asm = Assembly::new();
    let mut copy_vertices = Vec::new();
    for i in 0..c as usize {
        let ids = asm.add_vertices(d - 1, &format!("neq.a{i}"));
        for x in 0..ids.len() {
            for y in x + 1..ids.len() {
                asm.add_edge(ids[x], ids[y]);
            }
        }
        copy_vertices.push(ids);
    }
    let vs = asm.add_vertices(c as usize + 1, "neq.v");
    for &v in &vs {
        for ids in &copy_vertices {
            for &a in ids {
                asm.add_edge(v, a);
            }
        }
    }
    let portals = vec![vs[c as usize - 1], vs[c as usize]];
    let gadget = Gadget {
        graph: asm.build(),
        portals,
        context: GadgetContext { c, pattern: Graph::complete(d) },
        claimed: rel_cneq(c)?,
        coherent: Coherence::ClaimedCoherent,
    };
    gadget.validate()?;
    Ok(gadget)
}

/// The `CNEQ_1` base gadget for a pattern: built in for cliques, otherwise a
/// caller-supplied plugin is required and checked against the context.
pub fn cneq1_base_for(pattern: &Graph, plugin: Option<&Gadget>) -> Result<Gadget> {
    if let Some(base) = plugin {
        base.validate()?;
        if base.context.pattern != *pattern {
            return Err(Error::Gadget("base gadget pattern mismatch".into()));
        }
        if base.context.c != 1 {
            return Err(Error::Gadget("base gadget must have c = 1".into()));
        }
        if base.claimed != rel_cneq(1)? {
            return Err(Error::Gadget("base gadget must claim CNEQ_1".into()));
        }
        return Ok(base.clone());
    }
    let d = pattern.n();
    if *pattern == Graph::complete(d) && d >= 3 {
        return neq_gadget(1, d);
    }
    Err(Error::Gadget(
        "no CNEQ_1 base gadget for this pattern: supply a verified plugin gadget".into(),
    ))
}

/// Guards every portal of `g` with one `CNEQ_c` gadget (identifying one NEQ
/// portal with the old portal); the new portals are the free NEQ ends. The
/// claimed relation is unchanged.
pub fn coherence_wrap(g: &Gadget, base_neq: &Gadget) -> Result<Gadget> {
    base_neq.validate()?;
    if base_neq.context != g.context {
        return Err(Error::Gadget("coherence wrap: context mismatch".into()));
    }
    if base_neq.claimed != rel_cneq(g.context.c)? {
        return Err(Error::Gadget("coherence wrap: base must claim CNEQ_c".into()));
    }
    let mut asm = Assembly::from_graph(&g.graph);
    let mut new_portals = Vec::with_capacity(g.portals.len());
    for (i, &p) in g.portals.iter().enumerate() {
        let free = asm.add_vertex(format!("wrap.{i}"));
        asm.splice(base_neq, &[p, free], &format!("wrap{i}"))?;
        new_portals.push(free);
    }
    let wrapped = Gadget {
        graph: asm.build(),
        portals: new_portals,
        context: g.context.clone(),
        claimed: g.claimed.clone(),
        coherent: Coherence::Wrapped,
    };
    wrapped.validate()?;
    Ok(wrapped)
}
