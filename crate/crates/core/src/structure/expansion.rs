//! q-expansions in a bipartite graph between a head set `K` and a leaf set `L`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::ExpansionError;
use crate::multigraph::VertexId;
use crate::structure::bipartite::hopcroft_karp;

/// A q-expansion of `heads` into `leaves` with `N(leaves) ⊆ heads`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub heads: BTreeSet<VertexId>,
    pub leaves: BTreeSet<VertexId>,
    /// Leaf -> the head it is assigned to.
    pub assignment: BTreeMap<VertexId, VertexId>,
}

/// Finds nonempty `K' ⊆ K`, `L' ⊆ L` with a q-expansion of `K'` into `L'` and `N(L') ⊆ K'`.
///
/// Requires `|L| ≥ q|K|` and no leaf without a neighbor in `K`.
pub fn q_expansion(
    k: &BTreeSet<VertexId>,
    l: &BTreeSet<VertexId>,
    edges: &[(VertexId, VertexId)],
    q: usize,
) -> Result<Expansion, ExpansionError> {
    if q == 0 {
        return Err(ExpansionError::ZeroQ);
    }
    if k.is_empty() {
        return Err(ExpansionError::EmptyK);
    }
    if l.len() < q * k.len() {
        return Err(ExpansionError::TooFewLeaves {
            l: l.len(),
            needed: q * k.len(),
        });
    }
    let mut nbrs: BTreeMap<VertexId, BTreeSet<VertexId>> = l.iter().map(|&x| (x, BTreeSet::new())).collect();
    for &(a, b) in edges {
        let (head, leaf) = if k.contains(&a) && l.contains(&b) {
            (a, b)
        } else if k.contains(&b) && l.contains(&a) {
            (b, a)
        } else {
            return Err(ExpansionError::StrayEdge(a, b));
        };
        nbrs.get_mut(&leaf).expect("leaf").insert(head);
    }
    if let Some((&x, _)) = nbrs.iter().find(|(_, n)| n.is_empty()) {
        return Err(ExpansionError::IsolatedLeaf(x));
    }

    let mut heads: Vec<VertexId> = k.iter().copied().collect();
    let mut leaves: Vec<VertexId> = l.iter().copied().collect();
    loop {
        let head_index: BTreeMap<VertexId, usize> = heads.iter().enumerate().map(|(i, &h)| (h, i)).collect();
        // left side: q copies of each head; right side: leaves
        let mut adj = vec![Vec::new(); heads.len() * q];
        for (j, leaf) in leaves.iter().enumerate() {
            for h in &nbrs[leaf] {
                if let Some(&i) = head_index.get(h) {
                    for c in 0..q {
                        adj[i * q + c].push(j);
                    }
                }
            }
        }
        let m = hopcroft_karp(leaves.len(), &adj);
        if m.size == adj.len() {
            let mut assignment = BTreeMap::new();
            for (copy, r) in m.left_mate.iter().enumerate() {
                let r = r.expect("saturated");
                assignment.insert(leaves[r], heads[copy / q]);
            }
            return Ok(Expansion {
                heads: heads.into_iter().collect(),
                leaves: assignment.keys().copied().collect(),
                assignment,
            });
        }
        // alternating reach from unsaturated copies
        let mut copy_seen = vec![false; adj.len()];
        let mut leaf_seen = vec![false; leaves.len()];
        let mut queue: VecDeque<usize> = (0..adj.len()).filter(|&c| m.left_mate[c].is_none()).collect();
        for &c in &queue {
            copy_seen[c] = true;
        }
        while let Some(c) = queue.pop_front() {
            for &r in &adj[c] {
                if m.left_mate[c] == Some(r) || leaf_seen[r] {
                    continue;
                }
                leaf_seen[r] = true;
                let back = m.right_mate[r].expect("no augmenting path at maximum");
                if !copy_seen[back] {
                    copy_seen[back] = true;
                    queue.push_back(back);
                }
            }
        }
        let dropped: BTreeSet<usize> = (0..adj.len()).filter(|&c| copy_seen[c]).map(|c| c / q).collect();
        heads = heads
            .iter()
            .enumerate()
            .filter(|(i, _)| !dropped.contains(i))
            .map(|(_, &h)| h)
            .collect();
        leaves = leaves
            .iter()
            .enumerate()
            .filter(|(j, _)| !leaf_seen[*j])
            .map(|(_, &x)| x)
            .collect();
        debug_assert!(!heads.is_empty() && leaves.len() > q * heads.len());
    }
}

/// Checks every property of a q-expansion; returns the violations found.
pub fn expansion_violations(
    k: &BTreeSet<VertexId>,
    l: &BTreeSet<VertexId>,
    edges: &[(VertexId, VertexId)],
    q: usize,
    e: &Expansion,
) -> Vec<String> {
    let mut out = Vec::new();
    let adjacent = |a: VertexId, b: VertexId| edges.iter().any(|&(x, y)| (x == a && y == b) || (x == b && y == a));
    if e.heads.is_empty() || e.leaves.is_empty() {
        out.push("empty side".to_string());
    }
    if !e.heads.is_subset(k) {
        out.push("heads not inside K".to_string());
    }
    if !e.leaves.is_subset(l) {
        out.push("leaves not inside L".to_string());
    }
    let assigned: BTreeSet<VertexId> = e.assignment.keys().copied().collect();
    if assigned != e.leaves {
        out.push("assignment does not cover exactly the leaves".to_string());
    }
    let mut load: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (&leaf, &head) in &e.assignment {
        if !e.heads.contains(&head) {
            out.push(format!("leaf {leaf} assigned outside the heads"));
        }
        if !adjacent(leaf, head) {
            out.push(format!("leaf {leaf} assigned to non-neighbor {head}"));
        }
        *load.entry(head).or_default() += 1;
    }
    for &h in &e.heads {
        let got = load.get(&h).copied().unwrap_or(0);
        if got != q {
            out.push(format!("head {h} has {got} leaves, expected {q}"));
        }
    }
    for &leaf in &e.leaves {
        for &h in k {
            if adjacent(leaf, h) && !e.heads.contains(&h) {
                out.push(format!("leaf {leaf} sees {h} outside the heads"));
            }
        }
    }
    out
}
