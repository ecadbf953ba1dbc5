//! Random graphs and exhaustive oracles shared by the integration tests.
#![allow(dead_code)]

pub mod families;

use std::collections::BTreeSet;

use cotvd::generate::{generate, GeneratorSpec};
use cotvd::kernel::{KernelOutcome, Kernelization};
use cotvd::multigraph::{Instance, MultiGraph, VertexId};
use cotvd::solvers::brute_force_ctov;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p), each present pair doubled with probability `multi`.
pub fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64, multi: f64) -> MultiGraph {
    let mut g = MultiGraph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                let m = if rng.gen_bool(multi) { 2 } else { 1 };
                g.add_edge(a, b, m).unwrap();
            }
        }
    }
    g
}

pub fn simple_gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> MultiGraph {
    gnp(rng, n, p, 0.0)
}

pub fn clique_edges(vs: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    let mut e = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            e.push((a, b));
        }
    }
    e
}

pub fn random_tree_edges(rng: &mut ChaCha8Rng, vs: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    (1..vs.len()).map(|i| (vs[rng.gen_range(0..i)], vs[i])).collect()
}

pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> MultiGraph {
    let vs: Vec<VertexId> = (0..n).collect();
    MultiGraph::from_edges(n, &random_tree_edges(rng, &vs)).unwrap()
}

pub fn complete(n: usize) -> MultiGraph {
    let vs: Vec<VertexId> = (0..n).collect();
    MultiGraph::from_edges(n, &clique_edges(&vs)).unwrap()
}

pub fn random_subset(rng: &mut ChaCha8Rng, universe: &[VertexId], p: f64) -> BTreeSet<VertexId> {
    universe.iter().copied().filter(|_| rng.gen_bool(p)).collect()
}

/// A mix of planted and unstructured instances with `n ≤ 20` and `k ≤ 4`.
pub fn mixed_instance(seed: u64) -> Instance {
    let mut r = rng(seed);
    match seed % 4 {
        0 | 1 => {
            let spec = GeneratorSpec {
                seed,
                planted: r.gen_range(0..=3),
                cliques: r.gen_range(0..=3),
                clique_size: 1..=5,
                trees: r.gen_range(0..=3),
                tree_size: 1..=5,
                noise: r.gen_range(0..=1),
                noise_size: 3..=5,
                density: r.gen_range(0.1..0.6),
                multi: if seed % 8 == 1 { 0.3 } else { 0.0 },
                k: Some(r.gen_range(1..=4)),
            };
            let mut out = generate(&spec).instance;
            while out.graph.num_vertices() > 20 {
                let v = out.graph.vertices().last().unwrap();
                out.graph.remove_vertex(v).unwrap();
            }
            out
        }
        _ => {
            let n = r.gen_range(4..=20);
            let p = r.gen_range(0.08..0.45);
            let multi = if seed % 4 == 3 { 0.1 } else { 0.0 };
            Instance::new(gnp(&mut r, n, p, multi), r.gen_range(1..=4))
        }
    }
}

/// Exhaustive yes/no answer.
pub fn brute_decision(inst: &Instance, cap: usize) -> bool {
    brute_force_ctov(&inst.graph, inst.k, cap)
        .expect("instance within the oracle cap")
        .is_some()
}

/// The answer a kernelization certifies, solving the reduced instance exhaustively.
pub fn kernel_decision(k: &Kernelization, cap: usize) -> bool {
    match &k.outcome {
        KernelOutcome::Decided(a) => *a,
        KernelOutcome::Reduced(inst) => brute_decision(inst, cap),
    }
}

/// Every simple path of `g` as (vertex list), single vertices included.
pub fn all_paths(g: &MultiGraph) -> Vec<Vec<VertexId>> {
    fn extend(g: &MultiGraph, path: &mut Vec<VertexId>, out: &mut Vec<Vec<VertexId>>) {
        out.push(path.clone());
        let last = *path.last().unwrap();
        let next: Vec<VertexId> = g.neighbors(last).map(|(u, _)| u).collect();
        for u in next {
            if !path.contains(&u) {
                path.push(u);
                extend(g, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for v in g.vertices() {
        extend(g, &mut vec![v], &mut out);
    }
    out
}

/// Exhaustive LDTP: best total length of disjoint paths, path `i` joining
/// `pairs[i].0` to `pairs[i].1`, with at least one edge where `min_edges[i]`.
pub fn brute_ldtp(
    g: &MultiGraph,
    pairs: &[(BTreeSet<VertexId>, BTreeSet<VertexId>)],
    min_edges: &[bool],
) -> Option<usize> {
    let paths = all_paths(g);
    let fits = |i: usize, p: &Vec<VertexId>| {
        let (a, b) = (p[0], *p.last().unwrap());
        (p.len() >= 2 || !min_edges[i]) && pairs[i].0.contains(&a) && pairs[i].1.contains(&b)
    };
    let options: Vec<Vec<&Vec<VertexId>>> = (0..pairs.len())
        .map(|i| paths.iter().filter(|p| fits(i, p)).collect())
        .collect();
    fn go(i: usize, options: &[Vec<&Vec<VertexId>>], used: &mut BTreeSet<VertexId>) -> Option<usize> {
        if i == options.len() {
            return Some(0);
        }
        let mut best = None;
        for p in &options[i] {
            if p.iter().any(|v| used.contains(v)) {
                continue;
            }
            used.extend(p.iter().copied());
            if let Some(rest) = go(i + 1, options, used) {
                best = best.max(Some(rest + p.len() - 1));
            }
            for v in p.iter() {
                used.remove(v);
            }
        }
        best
    }
    go(0, &options, &mut BTreeSet::new())
}

/// LDTP on a clique by assigning every vertex to a path or to nothing; a
/// vertex set of size `s ≥ 2` is a path between any two of its members.
pub fn brute_ldtp_clique(
    n: usize,
    pairs: &[(BTreeSet<VertexId>, BTreeSet<VertexId>)],
    min_edges: &[bool],
) -> Option<usize> {
    let l = pairs.len();
    let mut best = None;
    let mut owner = vec![0usize; n];
    let total = (l + 1).pow(n as u32);
    for code in 0..total {
        let mut c = code;
        for o in owner.iter_mut() {
            *o = c % (l + 1);
            c /= l + 1;
        }
        let mut value = 0;
        let mut ok = true;
        for i in 0..l {
            let members: Vec<VertexId> = (0..n).filter(|&v| owner[v] == i + 1).collect();
            let (a, b) = &pairs[i];
            let good = match members.len() {
                0 => false,
                1 => !min_edges[i] && a.contains(&members[0]) && b.contains(&members[0]),
                _ => members
                    .iter()
                    .any(|x| a.contains(x) && members.iter().any(|y| y != x && b.contains(y))),
            };
            if !good {
                ok = false;
                break;
            }
            value += members.len() - 1;
        }
        if ok {
            best = best.max(Some(value));
        }
    }
    best
}

/// Every cycle through `v` as a vertex list starting at `v`; 2-cycles appear
/// for multi-edges. Each cycle is listed once per direction.
pub fn cycles_through(g: &MultiGraph, v: VertexId) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    for (u, m) in g.neighbors(v) {
        if m >= 2 {
            out.push(vec![v, u]);
        }
    }
    fn walk(g: &MultiGraph, v: VertexId, path: &mut Vec<VertexId>, out: &mut Vec<Vec<VertexId>>) {
        let last = *path.last().unwrap();
        for (u, _) in g.neighbors(last) {
            if u == v && path.len() >= 3 {
                out.push(path.clone());
            } else if u != v && !path.contains(&u) {
                path.push(u);
                walk(g, v, path, out);
                path.pop();
            }
        }
    }
    walk(g, v, &mut vec![v], &mut out);
    out
}

/// Largest number of cycles through `v` pairwise sharing only `v`, for ids below 64.
pub fn brute_max_flower(g: &MultiGraph, v: VertexId) -> usize {
    let mut sets: Vec<u64> = cycles_through(g, v)
        .into_iter()
        .map(|c| c.into_iter().filter(|&x| x != v).fold(0u64, |m, x| m | 1 << x))
        .collect();
    sets.sort_by_key(|m| (m.count_ones(), *m));
    sets.dedup();
    // a flower stays a flower when an interior shrinks to a smaller one
    let mut minimal: Vec<u64> = Vec::new();
    for &m in &sets {
        if !minimal.iter().any(|&x| x & !m == 0) {
            minimal.push(m);
        }
    }
    fn go(from: usize, sets: &[u64], used: u64) -> usize {
        (from..sets.len())
            .filter(|&i| sets[i] & used == 0)
            .map(|i| 1 + go(i + 1, sets, used | sets[i]))
            .max()
            .unwrap_or(0)
    }
    go(0, &minimal, 0)
}

/// Bitmask view of a graph with at most 64 vertices.
pub struct Masks {
    pub n: usize,
    pub adj: Vec<u64>,
    /// Neighbors joined by two or more edges.
    pub multi: Vec<u64>,
}

impl Masks {
    pub fn new(g: &MultiGraph) -> Self {
        let (h, _) = g.compacted();
        let n = h.num_vertices();
        assert!(n <= 64, "bitmask oracle needs n ≤ 64");
        let mut adj = vec![0u64; n];
        let mut multi = vec![0u64; n];
        for (u, v, m) in h.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            if m >= 2 {
                multi[u] |= 1 << v;
                multi[v] |= 1 << u;
            }
        }
        Masks { n, adj, multi }
    }

    /// Every component of the subgraph induced by `alive` is a clique or a tree.
    pub fn good(&self, alive: u64) -> bool {
        let mut left = alive;
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & alive & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            left &= !comp;
            let c = comp.count_ones() as usize;
            let mut twice = 0;
            let mut bits = comp;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if self.multi[v] & comp != 0 {
                    return false;
                }
                twice += (self.adj[v] & comp).count_ones() as usize;
            }
            let e = twice / 2;
            if e != c - 1 && e != c * (c - 1) / 2 {
                return false;
            }
        }
        true
    }

    /// Some set of at most `budget` vertices leaves only cliques and trees.
    pub fn solvable(&self, budget: usize) -> bool {
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        fn go(m: &Masks, alive: u64, from: usize, left: usize) -> bool {
            if m.good(alive) {
                return true;
            }
            if left == 0 {
                return false;
            }
            (from..m.n).any(|v| alive >> v & 1 == 1 && go(m, alive & !(1 << v), v + 1, left - 1))
        }
        go(self, all, 0, budget)
    }
}

/// Exhaustive yes/no answer for graphs up to 64 vertices.
pub fn mask_decision(inst: &Instance) -> bool {
    Masks::new(&inst.graph).solvable(inst.k)
}

/// Random multigraph with at most `max_n` vertices; multiplicities up to `max_mult`.
pub fn arb_graph(max_n: usize, max_mult: u32) -> impl proptest::strategy::Strategy<Value = MultiGraph> {
    use proptest::prelude::*;
    (1..=max_n)
        .prop_flat_map(move |n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(0..=max_mult * 2, pairs))
        })
        .prop_map(move |(n, codes)| {
            let mut g = MultiGraph::new(n);
            let mut i = 0;
            for a in 0..n {
                for b in a + 1..n {
                    // about half of the pairs stay empty
                    let c = codes[i];
                    i += 1;
                    if c > max_mult {
                        g.add_edge(a, b, c - max_mult).unwrap();
                    }
                }
            }
            g
        })
}
