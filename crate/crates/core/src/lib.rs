//! Exact solvers for clique and subgraph packing/partition problems on
//! graphs of bounded treewidth, together with the gadget constructions and
//! reduction generators used to produce hard instances, and brute-force
//! oracles that verify all of it at desk scale.

pub mod error;
pub mod gadgets;
pub mod graph;
pub mod oracle;
pub mod reductions;
pub mod relations;
pub mod treedec;

pub use error::{Error, Result};
pub use gadgets::Gadget;
pub use graph::{Graph, VertexMap};
pub use relations::Relation;
pub use treedec::{NiceTreeDecomposition, TreeDecomposition};
