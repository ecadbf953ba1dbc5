//! Exhaustive oracles for small graphs.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::SolverError;
use crate::multigraph::{MultiGraph, VertexId};

pub const DEFAULT_CTOV_CAP: usize = 22;
pub const DEFAULT_CYCLE_CAP: usize = 14;

/// Smallest feasible deletion set of size at most `budget`, by trying subsets in size order.
pub fn brute_force_ctov(g: &MultiGraph, budget: usize, cap: usize) -> Result<Option<BTreeSet<VertexId>>, SolverError> {
    let n = g.num_vertices();
    if n > cap {
        return Err(SolverError::CapExceeded { n, cap });
    }
    let vertices: Vec<VertexId> = g.vertices().collect();
    for size in 0..=budget.min(n) {
        for combo in vertices.iter().copied().combinations(size) {
            let x: BTreeSet<VertexId> = combo.into_iter().collect();
            if g.is_feasible_deletion(&x) {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}

/// Length of a longest simple cycle, or `None` for a forest.
pub fn brute_force_longest_cycle(g: &MultiGraph, cap: usize) -> Result<Option<usize>, SolverError> {
    let n = g.num_vertices();
    // the bitmask table needs one word per vertex subset
    let cap = cap.min(26);
    if n > cap {
        return Err(SolverError::CapExceeded { n, cap });
    }
    if let Some((u, v)) = g.multi_edges().next() {
        return Err(SolverError::NotSimple(u, v));
    }
    let (h, _) = g.compacted();
    let adj: Vec<u32> = (0..n)
        .map(|v| h.neighbors(v).fold(0u32, |m, (u, _)| m | (1 << u)))
        .collect();
    // reach[mask]: endpoints of paths that start at the lowest vertex of mask and visit exactly mask
    let mut reach = vec![0u32; 1 << n];
    for s in 0..n {
        reach[1 << s] = 1 << s;
    }
    let mut best = None;
    for mask in 1usize..(1 << n) {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        let s = mask.trailing_zeros() as usize;
        let size = mask.count_ones() as usize;
        if size >= 3 && ends & adj[s] != 0 {
            best = best.max(Some(size));
        }
        let mut e = ends;
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            // extend only by vertices above the start so each cycle has one anchor
            let mut next = adj[v] & !(mask as u32) & !((1u32 << (s + 1)) - 1);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[mask | (1 << w)] |= 1 << w;
            }
        }
    }
    Ok(best)
}
