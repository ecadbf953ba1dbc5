//! Exact branching solver for the deletion problem.

use std::collections::BTreeSet;

use crate::multigraph::{ComponentKind, MultiGraph, VertexId};
use crate::solvers::obstruction::{find_obstruction, obstruction_in};

/// Minimum-size set `X` with `|X| ≤ budget` such that every component of
/// `g - X` is a clique or a tree, or `None` if no such set exists.
pub fn exact_ctov(g: &MultiGraph, budget: usize) -> Option<BTreeSet<VertexId>> {
    min_solution(g, budget)
}

/// Smallest solution, solving bad components independently.
fn min_solution(g: &MultiGraph, budget: usize) -> Option<BTreeSet<VertexId>> {
    let mut total = BTreeSet::new();
    let mut remaining = budget;
    let bad: Vec<_> = g
        .components()
        .into_iter()
        .filter(|c| c.kind == ComponentKind::Other)
        .collect();
    // each bad component needs at least one deletion
    if bad.len() > budget {
        return None;
    }
    for (i, comp) in bad.iter().enumerate() {
        let sub = g.induced_subgraph(&comp.vertices.iter().copied().collect());
        // later components each still need one vertex
        let allowance = remaining - (bad.len() - 1 - i);
        let s = min_connected(&sub, allowance)?;
        remaining -= s.len();
        total.extend(s);
    }
    Some(total)
}

fn min_connected(g: &MultiGraph, budget: usize) -> Option<BTreeSet<VertexId>> {
    let lower = packing_lower_bound(g);
    (lower.max(1)..=budget).find_map(|b| branch(g, b))
}

/// Some solution of size at most `b` for a graph with at least one obstruction.
fn branch(g: &MultiGraph, b: usize) -> Option<BTreeSet<VertexId>> {
    let obstruction = match find_obstruction(g) {
        None => return Some(BTreeSet::new()),
        Some(o) => o,
    };
    if b == 0 || packing_lower_bound(g) > b {
        return None;
    }
    for &x in &obstruction.vertices {
        let mut h = g.clone();
        h.remove_vertex(x).expect("obstruction vertex is present");
        if let Some(mut s) = min_solution(&h, b - 1) {
            s.insert(x);
            return Some(s);
        }
    }
    None
}

/// Number of vertex-disjoint obstructions found greedily.
fn packing_lower_bound(g: &MultiGraph) -> usize {
    let mut h = g.clone();
    let mut count = 0;
    loop {
        let comps = h.components();
        let mut progressed = false;
        for c in comps.iter().filter(|c| c.kind == ComponentKind::Other) {
            if let Some(o) = obstruction_in(&h, c) {
                h.remove_vertices(o.vertices).expect("present");
                count += 1;
                progressed = true;
            }
        }
        if !progressed {
            return count;
        }
    }
}

/// Minimum solution with no budget limit.
pub fn minimum_ctov(g: &MultiGraph) -> BTreeSet<VertexId> {
    exact_ctov(g, g.num_vertices()).expect("deleting everything is feasible")
}
