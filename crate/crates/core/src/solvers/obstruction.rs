//! Minimal witnesses that a graph is not a disjoint union of cliques and trees.

use std::collections::{BTreeSet, VecDeque};

use crate::multigraph::{Component, ComponentKind, MultiGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObstructionKind {
    /// Triangle plus a pendant vertex.
    Paw,
    /// K4 minus one edge.
    Diamond,
    /// Chordless cycle of length at least four, or a double edge.
    InducedCycle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub vertices: Vec<VertexId>,
}

/// Some obstruction, or `None` exactly when every component is a clique or a tree.
pub fn find_obstruction(g: &MultiGraph) -> Option<Obstruction> {
    g.components()
        .iter()
        .filter(|c| c.kind == ComponentKind::Other)
        .find_map(|c| obstruction_in(g, c))
}

/// Obstruction inside a component classified `Other`.
pub fn obstruction_in(g: &MultiGraph, comp: &Component) -> Option<Obstruction> {
    if comp.kind != ComponentKind::Other {
        return None;
    }
    for &u in &comp.vertices {
        if let Some((w, _)) = g.neighbors(u).find(|&(w, c)| c >= 2 && w > u) {
            return Some(Obstruction {
                kind: ObstructionKind::InducedCycle,
                vertices: vec![u, w],
            });
        }
    }
    if let Some(tri) = find_triangle(g, &comp.vertices) {
        return Some(grow_triangle(g, comp, tri));
    }
    shortest_cycle(g, &comp.vertices).map(|vertices| Obstruction {
        kind: ObstructionKind::InducedCycle,
        vertices,
    })
}

fn find_triangle(g: &MultiGraph, vertices: &[VertexId]) -> Option<[VertexId; 3]> {
    for &u in vertices {
        let nbrs: Vec<VertexId> = g.neighbors(u).map(|(w, _)| w).filter(|&w| w > u).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if g.has_edge(a, b) {
                    return Some([u, a, b]);
                }
            }
        }
    }
    None
}

/// Extends a triangle to a maximal clique and reads off a paw or diamond
/// from any vertex hanging off it. The component is not a clique, so such a
/// vertex exists.
fn grow_triangle(g: &MultiGraph, comp: &Component, tri: [VertexId; 3]) -> Obstruction {
    let mut clique: Vec<VertexId> = tri.to_vec();
    for &x in &comp.vertices {
        if !clique.contains(&x) && clique.iter().all(|&q| g.has_edge(x, q)) {
            clique.push(x);
        }
    }
    let members: BTreeSet<VertexId> = clique.iter().copied().collect();
    for &x in &comp.vertices {
        if members.contains(&x) {
            continue;
        }
        let (adj, non): (Vec<VertexId>, Vec<VertexId>) = clique.iter().partition(|&&q| g.has_edge(x, q));
        match adj.len() {
            0 => continue,
            1 => {
                let q = adj[0];
                let others: Vec<VertexId> = clique.iter().copied().filter(|&y| y != q).take(2).collect();
                return Obstruction {
                    kind: ObstructionKind::Paw,
                    vertices: vec![q, others[0], others[1], x],
                };
            }
            _ => {
                return Obstruction {
                    kind: ObstructionKind::Diamond,
                    vertices: vec![adj[0], adj[1], non[0], x],
                };
            }
        }
    }
    unreachable!("a maximal clique in a connected non-clique has an outside neighbor")
}

/// Shortest cycle among `vertices`, which must induce a simple graph with a cycle.
fn shortest_cycle(g: &MultiGraph, vertices: &[VertexId]) -> Option<Vec<VertexId>> {
    let mut best: Option<Vec<VertexId>> = None;
    let n = g.id_bound();
    for &s in vertices {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        'bfs: while let Some(x) = queue.pop_front() {
            if let Some(b) = &best {
                if 2 * dist[x] + 1 >= b.len() {
                    break;
                }
            }
            for (y, _) in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let cycle = close_cycle(&parent, x, y);
                    if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                        best = Some(cycle);
                    }
                    break 'bfs;
                }
            }
        }
    }
    best
}

fn close_cycle(parent: &[usize], x: VertexId, y: VertexId) -> Vec<VertexId> {
    let path_to_root = |mut v: VertexId| {
        let mut p = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let px = path_to_root(x);
    let py = path_to_root(y);
    let on_py: BTreeSet<VertexId> = py.iter().copied().collect();
    let meet = *px.iter().find(|v| on_py.contains(v)).expect("same tree");
    let mut cycle: Vec<VertexId> = px.iter().copied().take_while(|&v| v != meet).collect();
    cycle.push(meet);
    let tail: Vec<VertexId> = py.iter().copied().take_while(|&v| v != meet).collect();
    cycle.extend(tail.into_iter().rev());
    cycle
}

/// The subgraph induced by `o.vertices` has exactly the shape `o.kind` claims.
pub fn is_valid_obstruction(g: &MultiGraph, o: &Obstruction) -> bool {
    let vs = &o.vertices;
    let distinct: BTreeSet<_> = vs.iter().collect();
    if distinct.len() != vs.len() || !vs.iter().all(|&v| g.contains(v)) {
        return false;
    }
    let simple_edges = |pairs: &[(usize, usize)]| {
        let mut count = 0;
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                let m = g.multiplicity(vs[i], vs[j]);
                let want = pairs.contains(&(i, j));
                if m > 1 || (m == 1) != want {
                    return false;
                }
                count += want as usize;
            }
        }
        count == pairs.len()
    };
    match o.kind {
        ObstructionKind::Paw => vs.len() == 4 && simple_edges(&[(0, 1), (0, 2), (1, 2), (0, 3)]),
        ObstructionKind::Diamond => vs.len() == 4 && simple_edges(&[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]),
        ObstructionKind::InducedCycle => {
            if vs.len() == 2 {
                return g.multiplicity(vs[0], vs[1]) >= 2;
            }
            let l = vs.len();
            let pairs: Vec<(usize, usize)> = (0..l).map(|i| (i.min((i + 1) % l), i.max((i + 1) % l))).collect();
            l >= 4 && simple_edges(&pairs)
        }
    }
}
