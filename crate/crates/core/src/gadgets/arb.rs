//! Gadgets realizing arbitrary regular relations: the `c = 1` construction
//! for any pattern, and the clique construction for `c >= 1` built on top of
//! it with a cover gadget.

use super::{
    cover_gadget, eq_gadget_ring, neq::cneq1_base_for, toggle_gadget, Assembly, Coherence,
    Gadget, GadgetContext,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::relations::{weight, Relation};

/// Shared skeleton of the two constructions: central vertices, one toggle +
/// equality ring + fan per tuple, and optional slack vertices.
fn relation_skeleton(
    asm: &mut Assembly,
    pattern: &Graph,
    tuples: &[Vec<u8>],
    portals: &[u32],
    psi: usize,
    base: Option<&Gadget>,
) -> Result<()> {
    let h = pattern.n();
    let neq = cneq1_base_for(pattern, base)?;
    let centrals = asm.add_vertices(h, "arb.v");
    let slack = asm.add_vertices(psi, "arb.z");
    for (i, tuple) in tuples.iter().enumerate() {
        let s_i = weight(tuple) as usize;
        // Toggle: first half on the centrals, second half fresh.
        let toggle = toggle_gadget(pattern, base)?;
        let tie = asm.add_vertices(h, &format!("arb.t{i}"));
        let mut tog_targets: Vec<u32> = centrals.clone();
        tog_targets.extend(&tie);
        asm.splice(&toggle, &tog_targets, &format!("arb.S{i}"))?;
        // Equality gadget over the toggle ties plus the fan ends.
        debug_assert_eq!((s_i + psi) % h, 0);
        let k_i = (s_i + psi) / h + 1;
        let ring = eq_gadget_ring(1, pattern, k_i, base)?;
        let ends = asm.add_vertices(s_i + psi, &format!("arb.e{i}"));
        let mut ring_targets: Vec<u32> = tie.clone();
        ring_targets.extend(&ends);
        asm.splice(&ring, &ring_targets, &format!("arb.E{i}"))?;
        // Fan: coordinate j receives tuple[j] links, in increasing order.
        let mut t = 0usize;
        for (j, &rj) in tuple.iter().enumerate() {
            for _ in 0..rj {
                asm.splice(&neq, &[ends[t], portals[j]], &format!("arb.N{i}.{t}"))?;
                t += 1;
            }
        }
        debug_assert_eq!(t, s_i);
        for (u, &z) in slack.iter().enumerate() {
            asm.splice(&neq, &[ends[s_i + u], z], &format!("arb.Z{i}.{u}"))?;
        }
    }
    Ok(())
}

/// Gadget realizing an `(x, |H|)`-regular relation over `{0,1}^l` in the
/// `c = 1` context, for an arbitrary pattern.
pub fn arb_relation_gadget(
    pattern: &Graph,
    relation: &Relation,
    base: Option<&Gadget>,
) -> Result<Gadget> {
    let h = pattern.n();
    if relation.bound > 1 {
        return Err(Error::Gadget("relation must be over {0,1}".into()));
    }
    if relation.is_empty() {
        return Err(Error::Gadget("cannot realize the empty relation".into()));
    }
    let x = relation
        .regularity_residue(h as u64)
        .ok_or_else(|| Error::Gadget("relation is not (x,|H|)-regular for any x".into()))?;
    let psi = ((h as u64 - x % h as u64) % h as u64) as usize;
    let mut asm = Assembly::new();
    let portals = asm.add_vertices(relation.arity, "arb.p");
    let tuples: Vec<Vec<u8>> = relation.tuples.iter().cloned().collect();
    relation_skeleton(&mut asm, pattern, &tuples, &portals, psi, base)?;
    let claimed = Relation::new(relation.arity, 1, relation.tuples.clone())?;
    let gadget = Gadget {
        graph: asm.build(),
        portals,
        context: GadgetContext { c: 1, pattern: pattern.clone() },
        claimed,
        coherent: Coherence::ClaimedCoherent,
    };
    gadget.validate()?;
    Ok(gadget)
}

/// Gadget realizing a `(0,d)`-regular relation over `{0..c}` for cliques.
/// For `c = 1` this is the arbitrary-pattern construction; for `c >= 2` the
/// skeleton is padded to a tuple count divisible by `d` and every internal
/// vertex receives `c - 1` coverage from a cover gadget.
pub fn clique_reg_relation_gadget(c: u8, d: usize, relation: &Relation) -> Result<Gadget> {
    let pattern = Graph::complete(d);
    if relation.is_empty() {
        return Err(Error::Gadget("cannot realize the empty relation".into()));
    }
    if !relation.is_regular(0, d as u64) {
        return Err(Error::Gadget("relation is not (0,d)-regular".into()));
    }
    if relation.bound > c {
        return Err(Error::Gadget("relation bound exceeds c".into()));
    }
    if c == 1 {
        return arb_relation_gadget(&pattern, relation, None);
    }
    let gamma = (d - relation.len() % d) % d;
    let mut tuples: Vec<Vec<u8>> = relation.tuples.iter().cloned().collect();
    let first = tuples[0].clone();
    tuples.extend(std::iter::repeat(first).take(gamma));
    let mut asm = Assembly::new();
    let portals = asm.add_vertices(relation.arity, "crr.p");
    relation_skeleton(&mut asm, &pattern, &tuples, &portals, 0, None)?;
    // Everything built so far except the portals is internal; the cover
    // gadget pins each internal vertex to coverage c - 1.
    let internal: Vec<u32> = (0..asm.n() as u32)
        .filter(|v| !portals.contains(v))
        .collect();
    if internal.len() % d != 0 {
        return Err(Error::Gadget(format!(
            "internal vertex count {} not divisible by {d}; construction invariant violated",
            internal.len()
        )));
    }
    let cover = cover_gadget(c, d, internal.len() / d)?;
    asm.splice(&cover, &internal, "crr.F")?;
    let claimed = Relation::new(relation.arity, c, relation.tuples.clone())?;
    let gadget = Gadget {
        graph: asm.build(),
        portals,
        context: GadgetContext { c, pattern },
        claimed,
        coherent: Coherence::ClaimedCoherent,
    };
    gadget.validate()?;
    Ok(gadget)
}

/// Tuple-count padding used by the clique construction, exposed for audits.
pub fn clique_reg_gamma(relation_len: usize, d: usize) -> usize {
    (d - relation_len % d) % d
}
