//! The toggle gadget: covers either the first or the second half of its
//! `2|H|` portals, exclusively.

use super::{eq_gadget_ring, neq::cneq1_base_for, Assembly, Coherence, Gadget, GadgetContext};
use crate::error::Result;
use crate::graph::Graph;
use crate::relations::Relation;

/// `{(1...1 0...0), (0...0 1...1)}` over `2h` coordinates.
pub fn toggle_relation(h: usize) -> Relation {
    let mut ones_zeros = vec![1u8; h];
    ones_zeros.extend(vec![0u8; h]);
    let mut zeros_ones = vec![0u8; h];
    zeros_ones.extend(vec![1u8; h]);
    Relation::new(2 * h, 1, [ones_zeros, zeros_ones]).expect("toggle relation is well formed")
}

/// Two `EQ_{2|H|}` rings cross-linked by `|H|` `CNEQ_1` gadgets on their
/// second halves; the free halves are the portals.
pub fn toggle_gadget(pattern: &Graph, base: Option<&Gadget>) -> Result<Gadget> {
    let h = pattern.n();
    let ring = eq_gadget_ring(1, pattern, 2, base)?;
    let neq = cneq1_base_for(pattern, base)?;
    let mut asm = Assembly::new();
    let x = asm.add_vertices(2 * h, "tog.x");
    let y = asm.add_vertices(2 * h, "tog.y");
    asm.splice(&ring, &x, "tog.X")?;
    asm.splice(&ring, &y, "tog.Y")?;
    for i in 0..h {
        asm.splice(&neq, &[x[h + i], y[h + i]], &format!("tog.n{i}"))?;
    }
    let mut portals: Vec<u32> = x[..h].to_vec();
    portals.extend(&y[..h]);
    let gadget = Gadget {
        graph: asm.build(),
        portals,
        context: GadgetContext { c: 1, pattern: pattern.clone() },
        claimed: toggle_relation(h),
        coherent: Coherence::Unknown,
    };
    gadget.validate()?;
    Ok(gadget)
}
