//! Induced paths on three vertices.

use std::collections::BTreeSet;

use crate::error::GraphError;
use crate::multigraph::{MultiGraph, VertexId};
use crate::structure::matching::{matching_size, maximum_matching};

/// Triples `(a, b, c)` inducing a P3 with center `b`, pairwise sharing at most one vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct P3Packing {
    pub triples: Vec<(VertexId, VertexId, VertexId)>,
}

impl P3Packing {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Union of all packed vertices.
    pub fn vertices(&self) -> BTreeSet<VertexId> {
        self.triples.iter().flat_map(|&(a, b, c)| [a, b, c]).collect()
    }
}

fn key(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    (a.min(b), a.max(b))
}

/// Every induced P3 inside `allowed`, as `(a, center, c)` with `a < c`, in lexicographic order.
pub fn induced_p3s(g: &MultiGraph, allowed: &BTreeSet<VertexId>) -> Vec<(VertexId, VertexId, VertexId)> {
    let mut out = Vec::new();
    for &a in allowed {
        for (b, _) in g.neighbors(a) {
            if !allowed.contains(&b) {
                continue;
            }
            for (c, _) in g.neighbors(b) {
                if c > a && allowed.contains(&c) && !g.has_edge(a, c) {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

/// Greedy maximal packing over `allowed`, scanning triples in lexicographic order.
pub fn maximal_p3_packing(g: &MultiGraph, allowed: &BTreeSet<VertexId>) -> P3Packing {
    let mut used_pairs = BTreeSet::new();
    let mut triples = Vec::new();
    for (a, b, c) in induced_p3s(g, allowed) {
        let pairs = [key(a, b), key(b, c), key(a, c)];
        if pairs.iter().any(|p| used_pairs.contains(p)) {
            continue;
        }
        used_pairs.extend(pairs);
        triples.push((a, b, c));
    }
    P3Packing { triples }
}

/// Largest number of induced P3s inside `allowed` that contain `v` and pairwise meet only in `v`.
/// `v` may take any position on the path.
pub fn p3_star_order(g: &MultiGraph, v: VertexId, allowed: &BTreeSet<VertexId>) -> Result<usize, GraphError> {
    let (_, adj) = star_graph(g, v, allowed)?;
    Ok(matching_size(&maximum_matching(&adj)))
}

/// The auxiliary graph whose matchings are the P3 stars at `v`.
fn star_graph(
    g: &MultiGraph,
    v: VertexId,
    allowed: &BTreeSet<VertexId>,
) -> Result<(Vec<VertexId>, Vec<Vec<usize>>), GraphError> {
    if !g.contains(v) || !allowed.contains(&v) {
        return Err(GraphError::UnknownVertex(v));
    }
    // any partner lies within distance two of v
    let mut near = BTreeSet::new();
    for (u, _) in g.neighbors(v) {
        if allowed.contains(&u) {
            near.insert(u);
            for (w, _) in g.neighbors(u) {
                if w != v && allowed.contains(&w) {
                    near.insert(w);
                }
            }
        }
    }
    let nodes: Vec<VertexId> = near.into_iter().collect();
    let mut adj = vec![Vec::new(); nodes.len()];
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            let (x, y) = (nodes[i], nodes[j]);
            let count = g.has_edge(v, x) as u8 + g.has_edge(v, y) as u8 + g.has_edge(x, y) as u8;
            if count == 2 {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    Ok((nodes, adj))
}

/// `p3_star_order(g, v, allowed) > bound`, with a cheap upper bound checked first.
pub fn p3_star_exceeds(
    g: &MultiGraph,
    v: VertexId,
    allowed: &BTreeSet<VertexId>,
    bound: usize,
) -> Result<bool, GraphError> {
    // every such P3 uses a distinct neighbor of v
    let deg = g.neighbors(v).filter(|(u, _)| allowed.contains(u)).count();
    if deg <= bound {
        if !g.contains(v) || !allowed.contains(&v) {
            return Err(GraphError::UnknownVertex(v));
        }
        return Ok(false);
    }
    Ok(p3_star_order(g, v, allowed)? > bound)
}
