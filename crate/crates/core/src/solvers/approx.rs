//! Greedy feasible deletion sets with no ratio guarantee.

use std::collections::BTreeSet;

use crate::multigraph::{MultiGraph, VertexId};
use crate::solvers::exact::exact_ctov;
use crate::solvers::obstruction::{find_obstruction, ObstructionKind};

/// Budget for the exact fallback on a component holding a long induced cycle.
const CYCLE_FALLBACK_BUDGET: usize = 4;

/// Deletes every vertex of each small obstruction found; for a long induced
/// cycle tries a cheap exact solve of its component first.
pub fn approx_ctov(g: &MultiGraph) -> BTreeSet<VertexId> {
    let mut h = g.clone();
    let mut out = BTreeSet::new();
    while let Some(o) = find_obstruction(&h) {
        let doomed: Vec<VertexId> = match o.kind {
            ObstructionKind::InducedCycle if o.vertices.len() > 4 => {
                let comp = h.component_of(o.vertices[0]).expect("present");
                let sub = h.induced_subgraph(&comp.vertices.iter().copied().collect());
                match exact_ctov(&sub, CYCLE_FALLBACK_BUDGET) {
                    Some(s) => s.into_iter().collect(),
                    None => o.vertices,
                }
            }
            _ => o.vertices,
        };
        h.remove_vertices(doomed.iter().copied()).expect("present");
        out.extend(doomed);
    }
    out
}
