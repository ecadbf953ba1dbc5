//! Flowers and blockers around a vertex.
//!
//! A flower is a set of cycles through `v` that pairwise share only `v`. A
//! double edge `v`–`u` is itself a cycle and is always worth taking, so those
//! neighbors are set aside first. The remaining problem is a packing of
//! vertex-disjoint paths between neighbors of `v` in `G - v`, which reduces to
//! maximum matching: every non-terminal `x` is doubled into `x`, `x'` joined
//! by an edge, and the packing number equals the matching number minus the
//! count of non-terminals. The Gallai–Edmonds decomposition of that auxiliary
//! graph yields a separator whose removal, plus all but one terminal per
//! remaining component, kills every cycle through `v` with at most twice as
//! many vertices as the flower has petals.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::GraphError;
use crate::multigraph::{MultiGraph, VertexId};
use crate::structure::matching::{gallai_edmonds_even, maximum_matching};

/// Outcome of [`gallai_flower_or_blocker`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlowerOrBlocker {
    /// At least `t + 1` cycles through `v`, each listed starting at `v`.
    Flower(Vec<Vec<VertexId>>),
    /// At most `2t` vertices, not containing `v`, meeting every cycle through `v`.
    Blocker(BTreeSet<VertexId>),
}

struct Auxiliary {
    /// Neighbors of `v` joined by a double edge.
    doubled: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
    mate: Vec<Option<usize>>,
    /// Auxiliary node -> (graph vertex, is the primed copy).
    origin: Vec<(VertexId, bool)>,
    terminal: BTreeSet<VertexId>,
    non_terminals: usize,
    /// Graph vertices of `G - v - doubled`.
    rest: BTreeSet<VertexId>,
}

fn build(g: &MultiGraph, v: VertexId) -> Result<Auxiliary, GraphError> {
    let nbrs = g.neighbor_set(v)?;
    let doubled: Vec<VertexId> = nbrs.iter().copied().filter(|&u| g.multiplicity(v, u) >= 2).collect();
    let terminal: BTreeSet<VertexId> = nbrs.iter().copied().filter(|&u| g.multiplicity(v, u) == 1).collect();
    let rest: BTreeSet<VertexId> = g.vertices().filter(|&x| x != v && g.multiplicity(v, x) < 2).collect();

    let mut plain = BTreeMap::new();
    let mut primed = BTreeMap::new();
    let mut origin = Vec::new();
    for &x in &rest {
        plain.insert(x, origin.len());
        origin.push((x, false));
        if !terminal.contains(&x) {
            primed.insert(x, origin.len());
            origin.push((x, true));
        }
    }
    let mut adj = vec![Vec::new(); origin.len()];
    let link = |a: usize, b: usize, adj: &mut Vec<Vec<usize>>| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for (&x, &px) in &primed {
        link(plain[&x], px, &mut adj);
    }
    for (x, y, _) in g.edges() {
        if !rest.contains(&x) || !rest.contains(&y) {
            continue;
        }
        match (terminal.contains(&x), terminal.contains(&y)) {
            (true, true) => link(plain[&x], plain[&y], &mut adj),
            (true, false) => {
                link(plain[&x], plain[&y], &mut adj);
                link(plain[&x], primed[&y], &mut adj);
            }
            (false, true) => {
                link(plain[&y], plain[&x], &mut adj);
                link(plain[&y], primed[&x], &mut adj);
            }
            (false, false) => {
                link(plain[&x], plain[&y], &mut adj);
                link(primed[&x], primed[&y], &mut adj);
            }
        }
    }
    let mate = maximum_matching(&adj);
    Ok(Auxiliary {
        doubled,
        adj,
        mate,
        origin,
        non_terminals: primed.len(),
        terminal,
        rest,
    })
}

impl Auxiliary {
    /// Maximum flower: the 2-cycles on double edges, then one cycle per
    /// terminal-to-terminal path in the matching plus the copy edges.
    fn flower(&self, v: VertexId) -> Vec<Vec<VertexId>> {
        let mut cycles: Vec<Vec<VertexId>> = self.doubled.iter().map(|&u| vec![v, u]).collect();
        // partner across the copy edge
        let twin = |node: usize| -> Option<usize> {
            let (x, is_primed) = self.origin[node];
            if self.terminal.contains(&x) {
                return None;
            }
            let want = !is_primed;
            self.adj[node].iter().copied().find(|&o| self.origin[o] == (x, want))
        };
        for (start, &(a, _)) in self.origin.iter().enumerate() {
            if !self.terminal.contains(&a) {
                continue;
            }
            let Some(mut node) = self.mate[start] else {
                continue;
            };
            let mut path = vec![a];
            loop {
                let (x, _) = self.origin[node];
                path.push(x);
                if self.terminal.contains(&x) {
                    break;
                }
                let t = twin(node).expect("non-terminal has a twin");
                match self.mate[t] {
                    Some(next) if next != node => node = next,
                    _ => {
                        path.clear();
                        break;
                    }
                }
            }
            // each path is found from both ends; keep it once
            if path.len() >= 2 && path[0] < *path.last().unwrap() {
                let mut cycle = vec![v];
                cycle.extend(path);
                cycles.push(cycle);
            }
        }
        cycles
    }

    fn matching_number(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    /// Blocker of size at most twice the flower order.
    fn blocker(&self, g: &MultiGraph) -> BTreeSet<VertexId> {
        let even = gallai_edmonds_even(&self.adj, &self.mate);
        let mut separator = BTreeSet::new();
        for node in 0..self.adj.len() {
            if !even[node] && self.adj[node].iter().any(|&o| even[o]) {
                separator.insert(self.origin[node].0);
            }
        }
        let mut blocker: BTreeSet<VertexId> = self.doubled.iter().copied().collect();
        blocker.extend(separator.iter().copied());
        let mut cut: BTreeSet<VertexId> = g.vertices().filter(|x| !self.rest.contains(x)).collect();
        cut.extend(separator.iter().copied());
        for comp in g.components_without(&cut) {
            let terms: Vec<VertexId> = comp
                .vertices
                .iter()
                .copied()
                .filter(|x| self.terminal.contains(x))
                .collect();
            blocker.extend(terms.into_iter().skip(1));
        }
        blocker
    }
}

/// Maximum set of cycles through `v` pairwise sharing only `v`.
pub fn max_flower(g: &MultiGraph, v: VertexId) -> Result<Vec<Vec<VertexId>>, GraphError> {
    let aux = build(g, v)?;
    let flower = aux.flower(v);
    debug_assert_eq!(
        flower.len(),
        aux.doubled.len() + aux.matching_number() - aux.non_terminals
    );
    Ok(flower)
}

/// Either a flower of order at least `t + 1` at `v`, or a blocker of size at most `2t`.
pub fn gallai_flower_or_blocker(g: &MultiGraph, v: VertexId, t: usize) -> Result<FlowerOrBlocker, GraphError> {
    let aux = build(g, v)?;
    let flower = aux.flower(v);
    if flower.len() > t {
        return Ok(FlowerOrBlocker::Flower(flower));
    }
    let blocker = aux.blocker(g);
    debug_assert!(blocker.len() <= 2 * flower.len());
    Ok(FlowerOrBlocker::Blocker(blocker))
}

/// Cycles all pass through `v`, are genuine cycles of `g`, and pairwise share only `v`.
pub fn is_flower(g: &MultiGraph, v: VertexId, cycles: &[Vec<VertexId>]) -> bool {
    let mut used = BTreeSet::new();
    for c in cycles {
        if c.first() != Some(&v) || c.len() < 2 {
            return false;
        }
        let distinct: BTreeSet<_> = c.iter().collect();
        if distinct.len() != c.len() {
            return false;
        }
        if c.len() == 2 {
            if g.multiplicity(c[0], c[1]) < 2 {
                return false;
            }
        } else if !(0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()])) {
            return false;
        }
        for &x in &c[1..] {
            if !used.insert(x) {
                return false;
            }
        }
    }
    true
}

/// `g - b` has no cycle through `v`.
pub fn is_blocker(g: &MultiGraph, v: VertexId, b: &BTreeSet<VertexId>) -> bool {
    if b.contains(&v) || !g.contains(v) {
        return false;
    }
    let mut cut = b.clone();
    cut.insert(v);
    let mut owner = BTreeMap::new();
    for (i, comp) in g.components_without(&cut).iter().enumerate() {
        for &x in &comp.vertices {
            owner.insert(x, i);
        }
    }
    let mut hit = BTreeSet::new();
    for (u, m) in g.neighbors(v) {
        if b.contains(&u) {
            continue;
        }
        if m >= 2 || !hit.insert(owner[&u]) {
            return false;
        }
    }
    true
}
