//! Hopcroft–Karp maximum bipartite matching.

use std::collections::VecDeque;

/// Maximum matching between `0..left` and `0..right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteMatching {
    pub left_mate: Vec<Option<usize>>,
    pub right_mate: Vec<Option<usize>>,
    pub size: usize,
}

impl BipartiteMatching {
    /// Matched pairs `(left, right)` in ascending left order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.left_mate
            .iter()
            .enumerate()
            .filter_map(|(l, r)| r.map(|r| (l, r)))
            .collect()
    }
}

/// Maximum-cardinality matching; `adj[l]` lists the right neighbors of left vertex `l`.
pub fn hopcroft_karp(right: usize, adj: &[Vec<usize>]) -> BipartiteMatching {
    let left = adj.len();
    let mut left_mate = vec![None; left];
    let mut right_mate: Vec<Option<usize>> = vec![None; right];
    let mut dist = vec![usize::MAX; left];
    let mut size = 0;

    loop {
        // layered BFS from free left vertices
        let mut queue = VecDeque::new();
        for l in 0..left {
            if left_mate[l].is_none() {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                match right_mate[r] {
                    None => found = true,
                    Some(l2) if dist[l2] == usize::MAX => {
                        dist[l2] = dist[l] + 1;
                        queue.push_back(l2);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut next = vec![0usize; left];
        for l in 0..left {
            if left_mate[l].is_none() && augment(l, adj, &mut left_mate, &mut right_mate, &mut dist, &mut next) {
                size += 1;
            }
        }
    }
    BipartiteMatching {
        left_mate,
        right_mate,
        size,
    }
}

fn augment(
    l: usize,
    adj: &[Vec<usize>],
    left_mate: &mut [Option<usize>],
    right_mate: &mut [Option<usize>],
    dist: &mut [usize],
    next: &mut [usize],
) -> bool {
    while next[l] < adj[l].len() {
        let r = adj[l][next[l]];
        next[l] += 1;
        let ok = match right_mate[r] {
            None => true,
            Some(l2) => dist[l2] == dist[l].wrapping_add(1) && augment(l2, adj, left_mate, right_mate, dist, next),
        };
        if ok {
            left_mate[l] = Some(r);
            right_mate[r] = Some(l);
            return true;
        }
    }
    dist[l] = usize::MAX;
    false
}

/// Maximum matching of a bipartite edge list with sides `0..left` and `0..right`.
/// Returns matched `(left, right)` pairs.
pub fn max_bipartite_matching(left: usize, right: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut adj = vec![Vec::new(); left];
    for &(l, r) in edges {
        assert!(l < left && r < right, "edge ({l}, {r}) outside the declared sides");
        adj[l].push(r);
    }
    for a in &mut adj {
        a.sort_unstable();
        a.dedup();
    }
    hopcroft_karp(right, &adj).pairs()
}
