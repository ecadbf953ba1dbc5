//! Size bounds that must hold once a group of rules is exhausted.

use std::collections::BTreeSet;

use crate::kernel::partition::partition_vertices;
use crate::kernel::size_bound;
use crate::kernel::Context;
use crate::multigraph::{Instance, VertexId};
use crate::structure::maximal_p3_packing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Phase {
    /// Rules 1–4 exhausted: `|N(v)| ≤ 7k` outside the large-dense vertices.
    LargeSparse,
    /// Rules 1–13 exhausted: `|V_ld| ≤ 101k² + 40k`.
    LargeDense,
    /// Every rule exhausted: the vertex-count bounds.
    Final,
}

/// Checks the bounds of `phase`; `s` is the feasible set in use, needed for the final phase.
pub fn assert_phase_invariants(inst: &Instance, phase: Phase, s: Option<&BTreeSet<VertexId>>) -> Vec<String> {
    let g = &inst.graph;
    let k = inst.k;
    let mut out = Vec::new();
    let p = partition_vertices(inst);
    match phase {
        Phase::LargeSparse => {
            for v in g.vertices().filter(|v| !p.large_dense.contains(v)) {
                let n = g.neighbors(v).count();
                if n > 7 * k {
                    out.push(format!("vertex {v} outside V_ld has {n} > 7k = {} neighbors", 7 * k));
                }
            }
        }
        Phase::LargeDense => {
            let bound = 101 * k * k + 40 * k;
            if p.large_dense.len() > bound {
                out.push(format!("|V_ld| = {} > 101k²+40k = {bound}", p.large_dense.len()));
            }
        }
        Phase::Final => {
            let n = g.num_vertices();
            if n > size_bound(k) {
                out.push(format!("|V| = {n} > 1389k²+52k = {}", size_bound(k)));
            }
            let owned;
            let s = match s {
                Some(s) => s,
                None => {
                    let ctx = Context::new(inst, Default::default(), None);
                    owned = ctx.solution().cloned();
                    match &owned {
                        Some(s) => s,
                        None => return out,
                    }
                }
            };
            let trees: BTreeSet<VertexId> = g
                .components_without(s)
                .into_iter()
                .filter(|c| c.is_tree())
                .flat_map(|c| c.vertices)
                .collect();
            if trees.len() > 1232 * k * k {
                out.push(format!("|V_tree| = {} > 1232k² = {}", trees.len(), 1232 * k * k));
            }
            let touched = trees
                .iter()
                .filter(|&&x| g.neighbors(x).any(|(y, _)| s.contains(&y)))
                .count();
            if touched > 28 * k * k {
                out.push(format!("{touched} tree vertices see S, above 28k² = {}", 28 * k * k));
            }
            let packed = maximal_p3_packing(g, &p.large_dense).vertices();
            let modular: BTreeSet<VertexId> = p.large_dense.difference(&packed).copied().collect();
            let parts = g.induced_subgraph(&modular).components().len();
            if parts > 12 * k {
                out.push(format!("V_ldmod has {parts} components, above 12k = {}", 12 * k));
            }
        }
    }
    out
}
