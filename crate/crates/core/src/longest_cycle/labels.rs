//! `q(C, u, v)` and the top-|S| labeling of components per terminal pair.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{CycleError, GraphError};
use crate::multigraph::{Component, ComponentKind, MultiGraph, VertexId};

/// Length of the longest `u,v`-path whose interior is exactly inside `comp`,
/// or `None` (minus infinity) when `u` or `v` has no neighbor in `comp`.
pub fn q_value(g: &MultiGraph, comp: &Component, u: VertexId, v: VertexId) -> Result<Option<usize>, CycleError> {
    for x in [u, v] {
        if !g.contains(x) {
            return Err(GraphError::UnknownVertex(x).into());
        }
    }
    let nu: Vec<VertexId> = attachments(g, comp, u);
    let nv: Vec<VertexId> = attachments(g, comp, v);
    if nu.is_empty() || nv.is_empty() {
        return Ok(None);
    }
    match comp.kind {
        ComponentKind::Clique => {
            if nu.len() == 1 && nv.len() == 1 && nu[0] == nv[0] {
                Ok(Some(2))
            } else {
                Ok(Some(comp.len() + 1))
            }
        }
        ComponentKind::Tree => {
            let targets: BTreeSet<VertexId> = nv.iter().copied().collect();
            let far = nu
                .iter()
                .map(|&w| farthest_in(g, comp, w, &targets))
                .max()
                .expect("nu is nonempty");
            Ok(Some(far + 2))
        }
        ComponentKind::Other => Err(CycleError::BadComponent),
    }
}

fn attachments(g: &MultiGraph, comp: &Component, u: VertexId) -> Vec<VertexId> {
    g.neighbors(u).map(|(w, _)| w).filter(|&w| comp.contains(w)).collect()
}

/// Largest BFS distance inside `comp` from `src` to a vertex of `targets`.
fn farthest_in(g: &MultiGraph, comp: &Component, src: VertexId, targets: &BTreeSet<VertexId>) -> usize {
    let mut dist = BTreeMap::from([(src, 0usize)]);
    let mut queue = VecDeque::from([src]);
    let mut best = 0;
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        if targets.contains(&x) {
            best = best.max(d);
        }
        for (y, _) in g.neighbors(x) {
            if comp.contains(y) && !dist.contains_key(&y) {
                dist.insert(y, d + 1);
                queue.push_back(y);
            }
        }
    }
    best
}

/// Components of `G - S` and, per ordered pair of `S`, the ids (indices into
/// `components`) of the top-|S| components by `q`.
#[derive(Clone, Debug)]
pub struct LabelTable {
    pub components: Vec<Component>,
    pub labels: BTreeMap<(VertexId, VertexId), Vec<usize>>,
    /// Every component with a finite `q`, best first; `labels` is a prefix of it.
    pub ranked: BTreeMap<(VertexId, VertexId), Vec<usize>>,
}

pub fn label_components(g: &MultiGraph, s: &BTreeSet<VertexId>) -> Result<LabelTable, CycleError> {
    let components = g.components_without(s);
    if components.iter().any(|c| !c.kind.is_good()) {
        return Err(CycleError::InfeasibleModulator);
    }
    let k = s.len();
    let mut labels = BTreeMap::new();
    let mut ranked = BTreeMap::new();
    for &u in s {
        for &v in s {
            let mut scored = Vec::new();
            for (id, c) in components.iter().enumerate() {
                if let Some(q) = q_value(g, c, u, v)? {
                    scored.push((q, id));
                }
            }
            scored.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            let ids: Vec<usize> = scored.into_iter().map(|(_, id)| id).collect();
            labels.insert((u, v), ids.iter().copied().take(k).collect());
            ranked.insert((u, v), ids);
        }
    }
    Ok(LabelTable {
        components,
        labels,
        ranked,
    })
}
