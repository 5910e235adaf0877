//! The `COVER^{c-1}` gadget for cliques: every portal forced to coverage
//! exactly `c-1`.

use super::{eq_gadget_ring, Assembly, Coherence, Gadget, GadgetContext};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::relations::rel_cover;

/// `d` blown-up pattern copies sharing `c*d` replacement vertices, tied to the
/// `k*d` portals through an `EQ_{(k+c)d}` ring.
pub fn cover_gadget(c: u8, d: usize, k: usize) -> Result<Gadget> {
    if d < 3 {
        return Err(Error::Gadget("cover gadget needs cliques of size >= 3".into()));
    }
    if c < 1 || k < 1 {
        return Err(Error::Gadget("cover gadget needs c >= 1 and k >= 1".into()));
    }
    let pattern = Graph::complete(d);
    let mut asm = Assembly::new();
    // Shared replacement vertices u_1..u_{c*d}.
    let us = asm.add_vertices(c as usize * d, "cov.u");
    // d copies of the pattern minus one vertex; every u adjacent to all of
    // each copy.
    for i in 0..d {
        let ids = asm.add_vertices(d - 1, &format!("cov.t{i}"));
        for x in 0..ids.len() {
            for y in x + 1..ids.len() {
                asm.add_edge(ids[x], ids[y]);
            }
        }
        for &u in &us {
            for &a in &ids {
                asm.add_edge(u, a);
            }
        }
    }
    let portals = asm.add_vertices(k * d, "cov.p");
    // EQ ring over the portals followed by the shared vertices.
    let ring = eq_gadget_ring(c, &pattern, k + c as usize, None)?;
    let mut ring_targets: Vec<u32> = portals.clone();
    ring_targets.extend(&us);
    asm.splice(&ring, &ring_targets, "cov.W")?;
    let claimed = rel_cover(k * d, c - 1);
    let claimed = crate::relations::Relation::new(k * d, c, claimed.tuples)?;
    let gadget = Gadget {
        graph: asm.build(),
        portals,
        context: GadgetContext { c, pattern },
        claimed,
        coherent: Coherence::Unknown,
    };
    gadget.validate()?;
    Ok(gadget)
}
