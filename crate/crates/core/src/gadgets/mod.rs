//! Gadget constructions: small graphs with ordered portal vertices that
//! realize coverage relations, plus the machinery to splice them into hosts.

mod arb;
mod cover;
mod eq;
mod neq;
mod toggle;

pub use arb::{arb_relation_gadget, clique_reg_relation_gadget};
pub use cover::cover_gadget;
pub use eq::{eq_gadget_ring, eq_gadget_single};
pub use neq::{cneq1_base_for, coherence_wrap, neq_gadget};
pub use toggle::{toggle_gadget, toggle_relation};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::relations::Relation;
use serde::{Deserialize, Serialize};

/// The packing context a gadget lives in: coverage bound and pattern graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetContext {
    pub c: u8,
    pub pattern: Graph,
}

/// Coherence status is metadata, not a machine-checked property: full
/// coherence quantifies over all extensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Coherence {
    ClaimedCoherent,
    Wrapped,
    Unknown,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Gadget {
    pub graph: Graph,
    /// Ordered, distinct portal vertices.
    pub portals: Vec<u32>,
    pub context: GadgetContext,
    pub claimed: Relation,
    pub coherent: Coherence,
}

impl Gadget {
    pub fn validate(&self) -> Result<()> {
        let mut seen = std::collections::BTreeSet::new();
        for &p in &self.portals {
            if p as usize >= self.graph.n() {
                return Err(Error::Gadget(format!("portal {p} outside graph")));
            }
            if !seen.insert(p) {
                return Err(Error::Gadget(format!("portal {p} repeated")));
            }
        }
        if self.claimed.arity != self.portals.len() {
            return Err(Error::Gadget(format!(
                "claimed arity {} != portal count {}",
                self.claimed.arity,
                self.portals.len()
            )));
        }
        if self.claimed.bound != self.context.c {
            return Err(Error::Gadget(format!(
                "claimed bound {} != context c {}",
                self.claimed.bound, self.context.c
            )));
        }
        Ok(())
    }

    pub fn internal_count(&self) -> usize {
        self.graph.n() - self.portals.len()
    }

    /// Parses a gadget from JSON, rebuilding graph adjacency.
    pub fn from_json(text: &str) -> Result<Gadget> {
        let mut g: Gadget = serde_json::from_str(text)
            .map_err(|e| Error::Gadget(format!("bad gadget JSON: {e}")))?;
        g.graph = g.graph.rebuild();
        g.context.pattern = g.context.pattern.rebuild();
        g.validate()?;
        Ok(g)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("gadget serializes")
    }
}

/// Attaches a gadget to a host: portal `i` is identified with `targets[i]`,
/// internal vertices become fresh host vertices carrying provenance labels
/// distinct per attachment.
pub fn attach(host: &Graph, gadget: &Gadget, targets: &[u32]) -> Result<Graph> {
    if targets.len() != gadget.portals.len() {
        return Err(Error::Gadget(format!(
            "attach arity mismatch: {} targets for {} portals",
            targets.len(),
            gadget.portals.len()
        )));
    }
    let mut seen = std::collections::BTreeSet::new();
    for &t in targets {
        if t as usize >= host.n() {
            return Err(Error::VertexOutOfRange { vertex: t as usize, n: host.n() });
        }
        if !seen.insert(t) {
            return Err(Error::Gadget(format!("attach target {t} repeated")));
        }
    }
    let mut asm = Assembly::from_graph(host);
    asm.splice(gadget, targets, &format!("att{}", host.n()))?;
    Ok(asm.build())
}

/// Incremental graph builder used by every gadget and reduction assembly.
pub(crate) struct Assembly {
    n: usize,
    edges: Vec<(u32, u32)>,
    labels: Vec<String>,
}

impl Assembly {
    pub fn new() -> Self {
        Assembly { n: 0, edges: Vec::new(), labels: Vec::new() }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let labels = if g.labels().is_empty() {
            vec![String::new(); g.n()]
        } else {
            g.labels().to_vec()
        };
        Assembly {
            n: g.n(),
            edges: g.edges().collect(),
            labels,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_vertex(&mut self, label: String) -> u32 {
        self.labels.push(label);
        self.n += 1;
        (self.n - 1) as u32
    }

    pub fn add_vertices(&mut self, count: usize, prefix: &str) -> Vec<u32> {
        (0..count).map(|i| self.add_vertex(format!("{prefix}.{i}"))).collect()
    }

    pub fn add_edge(&mut self, u: u32, v: u32) {
        debug_assert!(u != v);
        self.edges.push((u.min(v), u.max(v)));
    }

    /// Splices a gadget in: portals map onto `targets`, internal vertices are
    /// fresh. Returns the full old-to-new vertex map of the gadget.
    pub fn splice(&mut self, gadget: &Gadget, targets: &[u32], tag: &str) -> Result<Vec<u32>> {
        if targets.len() != gadget.portals.len() {
            return Err(Error::Gadget(format!(
                "splice arity mismatch: {} targets for {} portals",
                targets.len(),
                gadget.portals.len()
            )));
        }
        let g = &gadget.graph;
        let mut map = vec![u32::MAX; g.n()];
        for (i, &p) in gadget.portals.iter().enumerate() {
            map[p as usize] = targets[i];
        }
        for v in 0..g.n() {
            if map[v] == u32::MAX {
                let base = g.label(v).unwrap_or("i");
                map[v] = self.add_vertex(format!("{tag}/{base}#{v}"));
            }
        }
        for (u, v) in g.edges() {
            let (a, b) = (map[u as usize], map[v as usize]);
            if a != b {
                self.add_edge(a, b);
            }
        }
        Ok(map)
    }

    pub fn build(self) -> Graph {
        let edges: Vec<(usize, usize)> =
            self.edges.iter().map(|&(a, b)| (a as usize, b as usize)).collect();
        Graph::new(self.n, &edges)
            .expect("assembly produces valid simple graph")
            .with_labels(self.labels)
    }
}
