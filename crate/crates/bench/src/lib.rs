//! Fixtures shared by the benchmarks.

use twistlink_core::families::pretzel;
use twistlink_core::{enumerate_graphs, Constraints, Context, EmbeddedGraph, PlanarDiagram};

/// Pretzel diagrams `P(c, 3, 3)` for the given long tassels.
pub fn pretzels(cs: &[usize]) -> Vec<PlanarDiagram> {
    cs.iter().map(|&c| pretzel(&[c, 3, 3]).unwrap()).collect()
}

/// Every disk graph up to `max_edges` edges.
pub fn disk_graphs(max_edges: usize) -> Vec<EmbeddedGraph> {
    enumerate_graphs(Context::Disk, max_edges, &Constraints::none()).unwrap()
}
