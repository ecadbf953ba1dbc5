//! Large-sparse, large-dense and small vertices.

use std::collections::BTreeSet;

use crate::multigraph::{Instance, MultiGraph, VertexId};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Partition {
    pub large_sparse: BTreeSet<VertexId>,
    pub large_dense: BTreeSet<VertexId>,
    pub small: BTreeSet<VertexId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexClass {
    LargeSparse,
    LargeDense,
    Small,
}

/// Class of `v` for budget `k`: large when `|N(v)| > 7k`, dense when `ρ(v) > |N(v)|(|N(v)|-1)/4`.
pub fn classify(g: &MultiGraph, v: VertexId, k: usize) -> VertexClass {
    let n = g.neighbors(v).count();
    if n <= 7 * k {
        return VertexClass::Small;
    }
    let rho = g.rho(v).expect("vertex present");
    if 4 * rho <= n * (n - 1) {
        VertexClass::LargeSparse
    } else {
        VertexClass::LargeDense
    }
}

pub fn partition_vertices(inst: &Instance) -> Partition {
    let mut p = Partition::default();
    for v in inst.graph.vertices() {
        match classify(&inst.graph, v, inst.k) {
            VertexClass::LargeSparse => p.large_sparse.insert(v),
            VertexClass::LargeDense => p.large_dense.insert(v),
            VertexClass::Small => p.small.insert(v),
        };
    }
    p
}
