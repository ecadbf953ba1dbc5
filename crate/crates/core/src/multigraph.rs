//! Undirected multigraph without self-loops.
//!
//! Vertices are dense indices. Removing a vertex tombstones its slot, so the
//! ids of surviving vertices never change. Every iteration order exposed here
//! is ascending by id.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::GraphError;

/// Dense vertex index, stable for the lifetime of a [`MultiGraph`] value.
pub type VertexId = usize;

/// Shape of a connected component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    Clique,
    Tree,
    Other,
}

impl ComponentKind {
    /// Clique or tree.
    pub fn is_good(self) -> bool {
        self != ComponentKind::Other
    }
}

/// A connected component together with the counts needed to classify it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Vertices in ascending order.
    pub vertices: Vec<VertexId>,
    /// Number of edges inside the component, counted with multiplicity.
    pub edges: usize,
    /// Number of vertex pairs joined by at least one edge.
    pub adjacent_pairs: usize,
    pub kind: ComponentKind,
}

impl Component {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Connected and acyclic, where a parallel pair counts as a cycle.
    pub fn is_tree(&self) -> bool {
        self.edges + 1 == self.vertices.len()
    }

    /// Exactly one edge between every two distinct vertices.
    pub fn is_clique(&self) -> bool {
        let n = self.vertices.len();
        self.edges == n * (n.saturating_sub(1)) / 2 && self.adjacent_pairs == self.edges
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiGraph {
    alive: Vec<bool>,
    adj: Vec<BTreeMap<VertexId, u32>>,
    vertex_count: usize,
}

impl MultiGraph {
    /// Graph on vertices `0..n` with no edges.
    pub fn new(n: usize) -> Self {
        MultiGraph {
            alive: vec![true; n],
            adj: vec![BTreeMap::new(); n],
            vertex_count: n,
        }
    }

    /// Simple graph on `0..n` from an edge list; repeated pairs raise the multiplicity.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut g = MultiGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v, 1)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.alive.push(true);
        self.adj.push(BTreeMap::new());
        self.vertex_count += 1;
        self.alive.len() - 1
    }

    /// Upper bound (exclusive) on vertex ids, including tombstoned slots.
    pub fn id_bound(&self) -> usize {
        self.alive.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_count
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_count == 0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.alive.get(v).copied().unwrap_or(false)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive.iter().enumerate().filter_map(|(v, &a)| a.then_some(v))
    }

    fn check(&self, v: VertexId) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    /// Neighbors of `v` with the multiplicity of the joining pair. Empty for unknown vertices.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.adj
            .get(v)
            .into_iter()
            .flat_map(|m| m.iter().map(|(&u, &c)| (u, c)))
    }

    pub fn neighbor_set(&self, v: VertexId) -> Result<BTreeSet<VertexId>, GraphError> {
        self.check(v)?;
        Ok(self.adj[v].keys().copied().collect())
    }

    /// `|N(v)|`, ignoring multiplicity.
    pub fn neighbor_count(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check(v)?;
        Ok(self.adj[v].len())
    }

    /// Number of incident edges, counted with multiplicity.
    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check(v)?;
        Ok(self.adj[v].values().map(|&c| c as usize).sum())
    }

    /// Number of neighbor pairs of `v` joined by at least one edge.
    pub fn rho(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check(v)?;
        let nbrs = &self.adj[v];
        let mut count = 0;
        for &u in nbrs.keys() {
            count += self.adj[u].keys().filter(|&&w| w > u && nbrs.contains_key(&w)).count();
        }
        Ok(count)
    }

    /// Multiplicity of the pair `{u, v}`; 0 when absent or unknown.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> u32 {
        self.adj.get(u).and_then(|m| m.get(&v)).copied().unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// Adds `multiplicity` parallel copies of `{u, v}`.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, multiplicity: u32) -> Result<(), GraphError> {
        let current = self.multiplicity(u, v);
        self.set_multiplicity(u, v, current + multiplicity)
    }

    /// Sets the multiplicity of `{u, v}`; zero removes the pair.
    pub fn set_multiplicity(&mut self, u: VertexId, v: VertexId, multiplicity: u32) -> Result<(), GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if multiplicity == 0 {
            self.adj[u].remove(&v);
            self.adj[v].remove(&u);
        } else {
            self.adj[u].insert(v, multiplicity);
            self.adj[v].insert(u, multiplicity);
        }
        Ok(())
    }

    /// Removes one copy of `{u, v}`.
    pub fn remove_edge_unit(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        match self.multiplicity(u, v) {
            0 => Err(GraphError::MissingEdge(u, v)),
            m => self.set_multiplicity(u, v, m - 1),
        }
    }

    pub fn remove_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        self.check(v)?;
        let nbrs = std::mem::take(&mut self.adj[v]);
        for &u in nbrs.keys() {
            self.adj[u].remove(&v);
        }
        self.alive[v] = false;
        self.vertex_count -= 1;
        Ok(())
    }

    pub fn remove_vertices<I: IntoIterator<Item = VertexId>>(&mut self, vs: I) -> Result<(), GraphError> {
        for v in vs {
            self.remove_vertex(v)?;
        }
        Ok(())
    }

    /// Subgraph induced by `keep`, in the same id space.
    pub fn induced_subgraph(&self, keep: &BTreeSet<VertexId>) -> MultiGraph {
        let n = self.id_bound();
        let mut g = MultiGraph {
            alive: vec![false; n],
            adj: vec![BTreeMap::new(); n],
            vertex_count: 0,
        };
        for &v in keep {
            if !self.contains(v) {
                continue;
            }
            g.alive[v] = true;
            g.vertex_count += 1;
            g.adj[v] = self.adj[v]
                .iter()
                .filter(|(u, _)| keep.contains(u))
                .map(|(&u, &c)| (u, c))
                .collect();
        }
        g
    }

    /// Every pair `u < v` joined by at least one edge, with its multiplicity.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, u32)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u].range(u + 1..).map(move |(&v, &c)| (u, v, c)))
    }

    pub fn adjacent_pair_count(&self) -> usize {
        self.edges().count()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.edges().map(|(_, _, c)| c as usize).sum()
    }

    /// No pair has multiplicity above one.
    pub fn is_simple(&self) -> bool {
        self.edges().all(|(_, _, c)| c == 1)
    }

    /// Pairs with multiplicity at least two.
    pub fn multi_edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges().filter(|e| e.2 >= 2).map(|(u, v, _)| (u, v))
    }

    /// Connected components, each classified, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        self.components_avoiding(&|_| false)
    }

    /// Components of `self - x`.
    pub fn components_without(&self, x: &BTreeSet<VertexId>) -> Vec<Component> {
        self.components_avoiding(&|v| x.contains(&v))
    }

    fn components_avoiding(&self, removed: &dyn Fn(VertexId) -> bool) -> Vec<Component> {
        let mut seen = vec![false; self.id_bound()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] || removed(s) {
                continue;
            }
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            let mut vertices = Vec::new();
            let mut mult_sum = 0usize;
            let mut pair_sum = 0usize;
            while let Some(v) = queue.pop_front() {
                vertices.push(v);
                for (u, c) in self.neighbors(v) {
                    if removed(u) {
                        continue;
                    }
                    mult_sum += c as usize;
                    pair_sum += 1;
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
            vertices.sort_unstable();
            out.push(classify(vertices, mult_sum / 2, pair_sum / 2));
        }
        out
    }

    /// Component of `self` containing `v`.
    pub fn component_of(&self, v: VertexId) -> Result<Component, GraphError> {
        self.check(v)?;
        let mut seen = BTreeSet::from([v]);
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for (u, _) in self.neighbors(x) {
                if seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
        Ok(self.classify_set(&seen))
    }

    /// Classifies the subgraph induced by `set`, which is assumed connected.
    pub fn classify_set(&self, set: &BTreeSet<VertexId>) -> Component {
        let mut mult_sum = 0;
        let mut pair_sum = 0;
        for &v in set {
            for (u, c) in self.neighbors(v) {
                if set.contains(&u) {
                    mult_sum += c as usize;
                    pair_sum += 1;
                }
            }
        }
        classify(set.iter().copied().collect(), mult_sum / 2, pair_sum / 2)
    }

    /// Every component of `self - x` is a clique or a tree.
    pub fn is_feasible_deletion(&self, x: &BTreeSet<VertexId>) -> bool {
        self.components_without(x).iter().all(|c| c.kind.is_good())
    }

    /// Copy with the surviving vertices renumbered `0..n` in ascending order.
    /// Returns the copy and the old id of each new vertex.
    pub fn compacted(&self) -> (MultiGraph, Vec<VertexId>) {
        let old: Vec<VertexId> = self.vertices().collect();
        let mut new_id = vec![usize::MAX; self.id_bound()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let mut g = MultiGraph::new(old.len());
        for (u, v, c) in self.edges() {
            g.set_multiplicity(new_id[u], new_id[v], c)
                .expect("compacted ids are valid");
        }
        (g, old)
    }

    /// Copy with vertex `v` renamed to `perm[v]`; `perm` must be a permutation of `0..id_bound`.
    pub fn relabeled(&self, perm: &[VertexId]) -> MultiGraph {
        let n = self.id_bound();
        let mut g = MultiGraph::new(n);
        for (v, &to) in perm.iter().enumerate().take(n) {
            if !self.contains(v) {
                g.alive[to] = false;
            }
        }
        g.vertex_count = self.vertex_count;
        for (u, v, c) in self.edges() {
            g.set_multiplicity(perm[u], perm[v], c)
                .expect("permutation preserves validity");
        }
        g
    }
}

fn classify(vertices: Vec<VertexId>, edges: usize, adjacent_pairs: usize) -> Component {
    let n = vertices.len();
    let kind = if edges == n * (n.saturating_sub(1)) / 2 && adjacent_pairs == edges {
        ComponentKind::Clique
    } else if edges + 1 == n {
        ComponentKind::Tree
    } else {
        ComponentKind::Other
    };
    Component {
        vertices,
        edges,
        adjacent_pairs,
        kind,
    }
}

/// Instance of the deletion problem: a graph and a budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: MultiGraph,
    pub k: usize,
}

impl Instance {
    pub fn new(graph: MultiGraph, k: usize) -> Self {
        Instance { graph, k }
    }
}
