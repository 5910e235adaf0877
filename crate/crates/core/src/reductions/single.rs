//! Multiset to distinct-copy partition: one `EQ_d` gadget per `d`-clique of
//! the input simulates each clique's multiplicity.

use super::ReductionOutput;
use crate::error::{Error, Result};
use crate::gadgets::{eq_gadget_single, Assembly};
use crate::graph::{enumerate_copies, Graph};
use crate::treedec::TreeDecomposition;

/// Builds the distinct-copy instance: for every `d`-clique `X` of `g`, an
/// `EQ_d^[0,c]` gadget is attached with its portals identified with `V(X)`.
/// The emitted decomposition is the input decomposition with one extra bag
/// per clique: a duplicate of a bag containing the clique, extended by the
/// gadget's internal vertices.
pub fn reduce_multi_to_single(
    g: &Graph,
    td: &TreeDecomposition,
    c: u8,
    d: usize,
) -> Result<ReductionOutput> {
    if d < 3 || c < 1 {
        return Err(Error::Reduction("need d >= 3 and c >= 1".into()));
    }
    td.validate(g)
        .map_err(|v| Error::InvalidDecomposition(v.to_string()))?;
    let cliques = enumerate_copies(g, &Graph::complete(d))?;
    let eq = eq_gadget_single(c, &Graph::complete(d), None)?;

    let mut asm = Assembly::from_graph(g);
    let mut bags = td.bags.clone();
    let mut edges = td.edges.clone();
    let mut certificate = std::collections::BTreeMap::new();
    for (ci, clique) in cliques.iter().enumerate() {
        let map = asm.splice(&eq, &clique.vertices, &format!("EX{ci}"))?;
        let internals: Vec<u32> = map
            .iter()
            .copied()
            .filter(|v| !clique.vertices.contains(v))
            .collect();
        // Duplicate of a bag containing the clique, holding the gadget.
        let host = (0..bags.len())
            .find(|&b| clique.vertices.iter().all(|v| bags[b].binary_search(v).is_ok()))
            .ok_or_else(|| {
                Error::InvalidDecomposition(format!("no bag contains clique {ci}"))
            })?;
        let mut bag = bags[host].clone();
        bag.extend(&internals);
        bags.push(bag);
        edges.push((host, bags.len() - 1));
        certificate.insert(format!("clique.{ci}"), clique.vertices.clone());
        certificate.insert(format!("gadget.{ci}"), internals);
    }
    let graph = asm.build();
    let decomposition = TreeDecomposition::new(bags, edges);
    decomposition
        .validate(&graph)
        .map_err(|v| Error::InvalidDecomposition(format!("emitted decomposition: {v}")))?;
    Ok(ReductionOutput { graph, decomposition, certificate })
}
