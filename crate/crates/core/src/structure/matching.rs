//! Edmonds' blossom algorithm for maximum matching in general graphs, plus
//! the Gallai–Edmonds set of vertices missed by some maximum matching.

use std::collections::VecDeque;

const NONE: usize = usize::MAX;

struct Search<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    outer: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [Vec<usize>], mate: Vec<usize>) -> Self {
        let n = adj.len();
        Search {
            adj,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            outer: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn reset(&mut self) {
        let n = self.adj.len();
        self.parent.iter_mut().for_each(|p| *p = NONE);
        self.outer.iter_mut().for_each(|o| *o = false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        debug_assert_eq!(self.parent.len(), n);
    }

    fn add_root(&mut self, r: usize) {
        self.outer[r] = true;
        self.queue.push_back(r);
    }

    /// Nearest common base of `a` and `b` in the alternating forest, or
    /// `None` when they hang from different roots.
    fn lca(&self, mut a: usize, mut b: usize) -> Option<usize> {
        let mut on_path = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return Some(b);
            }
            if self.mate[b] == NONE {
                return None;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, in_blossom: &mut [bool]) {
        while self.base[v] != b {
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn contract(&mut self, u: usize, v: usize, b: usize) {
        let n = self.adj.len();
        let mut in_blossom = vec![false; n];
        self.mark_path(u, b, v, &mut in_blossom);
        self.mark_path(v, b, u, &mut in_blossom);
        for i in 0..n {
            if in_blossom[self.base[i]] {
                self.base[i] = b;
                if !self.outer[i] {
                    self.outer[i] = true;
                    self.queue.push_back(i);
                }
            }
        }
    }

    /// Grows the forest until the queue empties or an exposed vertex is
    /// reached; returns that vertex.
    fn grow(&mut self) -> Option<usize> {
        while let Some(u) = self.queue.pop_front() {
            for i in 0..self.adj[u].len() {
                let v = self.adj[u][i];
                if self.base[u] == self.base[v] || self.mate[u] == v {
                    continue;
                }
                if self.outer[v] {
                    match self.lca(u, v) {
                        Some(b) => self.contract(u, v, b),
                        // two trees meet: only possible below maximum
                        None => unreachable!("augmenting path between two search trees"),
                    }
                } else if self.parent[v] == NONE {
                    self.parent[v] = u;
                    if self.mate[v] == NONE {
                        return Some(v);
                    }
                    let w = self.mate[v];
                    self.outer[w] = true;
                    self.queue.push_back(w);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// Maximum matching of the graph with adjacency lists `adj`; `mate[v]` is the partner of `v`.
pub fn maximum_matching(adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let n = adj.len();
    let mut mate = vec![NONE; n];
    // greedy start
    for u in 0..n {
        if mate[u] == NONE {
            if let Some(&v) = adj[u].iter().find(|&&v| v != u && mate[v] == NONE) {
                mate[u] = v;
                mate[v] = u;
            }
        }
    }
    let mut search = Search::new(adj, mate);
    for r in 0..n {
        if search.mate[r] != NONE {
            continue;
        }
        search.reset();
        search.add_root(r);
        if let Some(end) = search.grow() {
            search.augment(end);
        }
    }
    search.mate.into_iter().map(|m| (m != NONE).then_some(m)).collect()
}

/// Vertices left exposed by at least one maximum matching, given a maximum matching `mate`.
pub fn gallai_edmonds_even(adj: &[Vec<usize>], mate: &[Option<usize>]) -> Vec<bool> {
    let mate: Vec<usize> = mate.iter().map(|m| m.unwrap_or(NONE)).collect();
    let mut search = Search::new(adj, mate);
    for r in 0..adj.len() {
        if search.mate[r] == NONE {
            search.add_root(r);
        }
    }
    let reached = search.grow();
    debug_assert!(reached.is_none(), "matching passed in is not maximum");
    search.outer
}

/// Number of matched pairs.
pub fn matching_size(mate: &[Option<usize>]) -> usize {
    mate.iter().filter(|m| m.is_some()).count() / 2
}
