//! Instance families aimed at individual reduction rules. Each builder is
//! randomized by its seed; whether the intended rule actually fires is left
//! to the scheduler.
#![allow(dead_code)]

use cotvd::multigraph::{Instance, MultiGraph, VertexId};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{clique_edges, random_tree_edges, rng};

/// Edge list builder with fresh vertex ids.
#[derive(Default)]
pub struct Builder {
    n: usize,
    edges: Vec<(VertexId, VertexId, u32)>,
}

impl Builder {
    pub fn vertex(&mut self) -> VertexId {
        self.n += 1;
        self.n - 1
    }

    pub fn vertices(&mut self, count: usize) -> Vec<VertexId> {
        (0..count).map(|_| self.vertex()).collect()
    }

    pub fn edge(&mut self, a: VertexId, b: VertexId) {
        self.multi(a, b, 1);
    }

    pub fn multi(&mut self, a: VertexId, b: VertexId, m: u32) {
        if a == b {
            return;
        }
        let key = (a.min(b), a.max(b));
        if let Some(e) = self.edges.iter_mut().find(|e| (e.0, e.1) == key) {
            e.2 = e.2.max(m);
        } else {
            self.edges.push((key.0, key.1, m));
        }
    }

    pub fn clique(&mut self, size: usize) -> Vec<VertexId> {
        let vs = self.vertices(size);
        for (a, b) in clique_edges(&vs) {
            self.edge(a, b);
        }
        vs
    }

    pub fn tree(&mut self, rng: &mut ChaCha8Rng, size: usize) -> Vec<VertexId> {
        let vs = self.vertices(size);
        for (a, b) in random_tree_edges(rng, &vs) {
            self.edge(a, b);
        }
        vs
    }

    /// Cycle through `hub` with `len - 1` new vertices.
    pub fn cycle_through(&mut self, hub: VertexId, len: usize) -> Vec<VertexId> {
        let vs = self.vertices(len - 1);
        self.edge(hub, vs[0]);
        for w in vs.windows(2) {
            self.edge(w[0], w[1]);
        }
        self.edge(*vs.last().unwrap(), hub);
        vs
    }

    /// Shuffles vertex ids and builds the instance.
    pub fn finish(self, rng: &mut ChaCha8Rng, k: usize) -> Instance {
        let mut perm: Vec<VertexId> = (0..self.n).collect();
        perm.shuffle(rng);
        let mut g = MultiGraph::new(self.n);
        for (a, b, m) in self.edges {
            g.add_edge(perm[a], perm[b], m).unwrap();
        }
        Instance::new(g, k)
    }
}

/// Pads `hub` with pendant trees until it has more than `7k` neighbors.
fn pad_sparse(b: &mut Builder, rng: &mut ChaCha8Rng, hub: VertexId, have: usize, k: usize) {
    let want = 7 * k + 1 + rng.gen_range(0..3);
    for _ in have..want {
        let size = if rng.gen_bool(0.7) { 1 } else { rng.gen_range(2..=3) };
        let t = b.tree(rng, size);
        b.edge(hub, t[0]);
    }
}

/// A large-sparse hub with more than `k` nearly disjoint cycles through it.
pub fn flower_hub(seed: u64) -> Instance {
    let mut r = rng(seed);
    let k = r.gen_range(1..=2);
    let mut b = Builder::default();
    let hub = b.vertex();
    let petals = k + r.gen_range(1..=2);
    let mut have = 0;
    for _ in 0..petals {
        let len = r.gen_range(3..=5);
        b.cycle_through(hub, len);
        have += 2;
    }
    pad_sparse(&mut b, &mut r, hub, have, k);
    b.finish(&mut r, k)
}

/// A large-sparse hub with few cycles but more than `k` cyclic blobs hanging off single edges.
pub fn blob_hub(seed: u64) -> Instance {
    let mut r = rng(seed);
    let k = r.gen_range(1..=2);
    let mut b = Builder::default();
    let hub = b.vertex();
    let mut have = 0;
    for _ in 0..r.gen_range(0..=k) {
        b.cycle_through(hub, 3);
        have += 2;
    }
    for _ in 0..k + r.gen_range(1..=2) {
        let blob = if r.gen_bool(0.5) {
            b.clique(r.gen_range(3..=4))
        } else {
            let len = r.gen_range(4..=5);
            let vs = b.vertices(len);
            for i in 0..len {
                b.edge(vs[i], vs[(i + 1) % len]);
            }
            vs
        };
        b.edge(hub, blob[0]);
        have += 1;
    }
    pad_sparse(&mut b, &mut r, hub, have, k);
    b.finish(&mut r, k)
}

/// A large-sparse hub whose pendant trees touch nothing else.
pub fn lonely_trees(seed: u64) -> Instance {
    let mut r = rng(seed);
    let k = r.gen_range(1..=2);
    let mut b = Builder::default();
    let hub = b.vertex();
    let mut have = 0;
    for _ in 0..r.gen_range(1..=k) {
        let len = r.gen_range(3..=4);
        b.cycle_through(hub, len);
        have += 2;
    }
    pad_sparse(&mut b, &mut r, hub, have, k);
    b.finish(&mut r, k)
}

/// A large-sparse hub and a few blocker vertices; many trees join the hub to a blocker.
pub fn blocked_trees(seed: u64) -> Instance {
    let mut r = rng(seed);
    let k = r.gen_range(1..=2);
    let mut b = Builder::default();
    let hub = b.vertex();
    let blockers = b.vertices(r.gen_range(1..=k));
    if r.gen_bool(0.5) {
        b.edge(hub, blockers[0]);
    }
    let trees = (7 * k + 1).max(4 * k) + r.gen_range(0..3);
    for _ in 0..trees {
        let size = r.gen_range(1..=2);
        let t = b.tree(&mut r, size);
        b.edge(hub, t[0]);
        let bl = *blockers.choose(&mut r).unwrap();
        b.edge(bl, *t.last().unwrap());
        if r.gen_bool(0.2) {
            let other = *blockers.choose(&mut r).unwrap();
            b.edge(other, t[0]);
        }
    }
    b.finish(&mut r, k)
}

/// Hubs joined to many small cliques; no hub is large.
pub fn clique_crowd(seed: u64) -> Instance {
    let mut r = rng(seed);
    let hubs_n = r.gen_range(1..=2);
    let k = hubs_n + r.gen_range(0..=1);
    let mut b = Builder::default();
    let hubs = b.vertices(hubs_n);
    let cliques = 2 * hubs_n + r.gen_range(0..=2);
    for _ in 0..cliques {
        let c = b.clique(r.gen_range(3..=4));
        let h = *hubs.choose(&mut r).unwrap();
        b.edge(h, c[0]);
        if r.gen_bool(0.6) {
            b.edge(h, c[1]);
        }
        if hubs_n > 1 && r.gen_bool(0.3) {
            b.edge(hubs[0], c[2]);
        }
    }
    if r.gen_bool(0.5) {
        // keep something bad around so the budget matters
        b.cycle_through(hubs[0], 4);
    }
    b.finish(&mut r, k)
}

/// A large-dense hub straddling two big cliques.
pub fn dense_star(seed: u64) -> Instance {
    let mut r = rng(seed);
    let k = 2;
    let mut b = Builder::default();
    let hub = b.vertex();
    let a = b.clique(7 * k + r.gen_range(1..=3));
    let c = b.clique(7 * k + r.gen_range(1..=3));
    for &x in &a[..a.len() - r.gen_range(0..=1)] {
        b.edge(hub, x);
    }
    for &x in &c[..k + r.gen_range(1..=2)] {
        b.edge(hub, x);
    }
    // a second, unrelated obstruction
    let other = b.vertex();
    b.cycle_through(other, 4);
    b.finish(&mut r, k)
}

/// Big cliques with a few edges removed and some multi-edges; aimed at the
/// rules that read the large-dense vertices.
pub fn dense_mess(seed: u64) -> Instance {
    let mut r = rng(seed);
    let k = r.gen_range(1..=3);
    let mut b = Builder::default();
    let mut all = Vec::new();
    for _ in 0..r.gen_range(1..=2) {
        let c = b.clique(7 * k + r.gen_range(1..=4));
        all.push(c);
    }
    let hubs = b.vertices(r.gen_range(0..=k));
    for &h in &hubs {
        for c in &all {
            for &x in c {
                if r.gen_bool(0.5) {
                    b.edge(h, x);
                }
            }
        }
    }
    let mut g = b;
    // knock out a few clique edges
    let removals = r.gen_range(0..=k + 1);
    for _ in 0..removals {
        let c = all.choose(&mut r).unwrap();
        let x = *c.choose(&mut r).unwrap();
        let y = *c.choose(&mut r).unwrap();
        g.edges.retain(|e| (e.0, e.1) != (x.min(y), x.max(y)));
    }
    for _ in 0..r.gen_range(0..=2) {
        let c = all.choose(&mut r).unwrap();
        let x = *c.choose(&mut r).unwrap();
        let y = *c.choose(&mut r).unwrap();
        g.multi(x, y, 2);
    }
    g.finish(&mut r, k)
}

/// `k` dense hubs over a clique core and a tree. Each hub holds `k` double
/// edges into the core so the core stays mostly non-quiet.
pub fn dense_hub_with_trees(seed: u64) -> Instance {
    let mut r = rng(seed);
    let k = 4;
    let mut b = Builder::default();
    let hubs = b.vertices(k);
    for (a, c) in clique_edges(&hubs) {
        b.edge(a, c);
    }
    let core = b.clique(r.gen_range(20..=23));
    let size = 2 * k + 4 + r.gen_range(0..=1);
    let tree = b.tree(&mut r, size);
    for (i, &h) in hubs.iter().enumerate() {
        for (j, &x) in core.iter().enumerate() {
            let m = if j / k == i { 2 } else { 1 };
            b.multi(h, x, m);
        }
        for &x in &tree {
            b.edge(h, x);
        }
    }
    b.finish(&mut r, k)
}

/// Disjoint double edges and parallel bundles.
pub fn multi_edges(seed: u64) -> Instance {
    let mut r = rng(seed);
    let k = r.gen_range(1..=3);
    let mut b = Builder::default();
    let hubs = b.vertices(r.gen_range(1..=k + 1));
    for &h in &hubs {
        for _ in 0..r.gen_range(1..=k + 2) {
            let x = b.vertex();
            b.multi(h, x, r.gen_range(2..=3));
        }
    }
    for _ in 0..r.gen_range(0..=k * k + 1) {
        let x = b.vertex();
        let y = b.vertex();
        b.multi(x, y, 2);
    }
    b.finish(&mut r, k)
}

/// Long induced paths and pendant structures for the low-degree rules.
pub fn threads(seed: u64) -> Instance {
    let mut r = rng(seed);
    let k = r.gen_range(1..=2);
    let mut b = Builder::default();
    let hub = b.vertex();
    for _ in 0..r.gen_range(2..=4) {
        b.cycle_through(hub, r.gen_range(4..=9));
    }
    for _ in 0..r.gen_range(0..=3) {
        let size = r.gen_range(1..=4);
        let t = b.tree(&mut r, size);
        b.edge(hub, t[0]);
    }
    b.finish(&mut r, k)
}

/// A dense hub whose clique neighbors are paired by double edges. The greedy
/// set deletes every paired vertex and leaves the hub in a star.
pub fn shielded_hub(seed: u64) -> Instance {
    let mut r = rng(seed);
    let k = r.gen_range(2..=3);
    let mut b = Builder::default();
    let hub = b.vertex();
    let pairs = r.gen_range(k..=2 * k);
    let shield = b.clique(2 * pairs);
    for w in shield.chunks(2) {
        b.multi(w[0], w[1], 2);
    }
    let leaves = 7 * k + 1 - (2 * pairs).min(7 * k) + r.gen_range(0..=2);
    let tips = b.vertices(leaves);
    for &x in shield.iter().chain(&tips) {
        b.edge(hub, x);
    }
    for &s in &shield {
        for &t in &tips {
            if r.gen_bool(0.85) {
                b.edge(s, t);
            }
        }
    }
    for &t in &tips {
        if r.gen_bool(0.3) {
            let size = r.gen_range(1..=2);
            let tail = b.tree(&mut r, size);
            b.edge(t, tail[0]);
        }
    }
    b.finish(&mut r, k)
}

/// Two big cliques, each missing one edge and carrying one double edge at an
/// end of the missing edge.
pub fn split_cliques(seed: u64) -> Instance {
    let mut r = rng(seed);
    let mut b = Builder::default();
    for _ in 0..2 {
        let c = b.clique(r.gen_range(10..=13));
        b.edges.retain(|e| (e.0, e.1) != (c[0], c[1]));
        let x = r.gen_range(2..c.len());
        let y = c[r.gen_range(0..=1)];
        b.multi(c[x], y, 2);
    }
    b.finish(&mut r, 1)
}

/// Chains of double edges, long enough to exceed `k²` multi-edges.
pub fn multi_chain(seed: u64) -> Instance {
    let mut r = rng(seed);
    let k = r.gen_range(1..=3);
    let mut b = Builder::default();
    let mut count = 0;
    while count <= k * k {
        let len = r.gen_range(1..=k * k + 1 - count).min(2 * k);
        let vs = b.vertices(len + 1);
        for w in vs.windows(2) {
            b.multi(w[0], w[1], 2);
        }
        if r.gen_bool(0.3) {
            let t = b.vertex();
            b.edge(vs[0], t);
        }
        count += len;
    }
    b.finish(&mut r, k)
}

/// Bundles of three or more parallel edges, at most `k` of them, next to a
/// clique and a tree.
pub fn thick_edges(seed: u64) -> Instance {
    let mut r = rng(seed);
    let k = r.gen_range(1..=3);
    let mut b = Builder::default();
    let c = b.clique(r.gen_range(3..=5));
    let size = r.gen_range(2..=5);
    let t = b.tree(&mut r, size);
    if r.gen_bool(0.5) {
        b.edge(c[0], t[0]);
    }
    for _ in 0..r.gen_range(1..=k) {
        let x = b.vertex();
        let y = if r.gen_bool(0.5) {
            b.vertex()
        } else {
            *t.choose(&mut r).unwrap()
        };
        b.multi(x, y, r.gen_range(3..=5));
        if r.gen_bool(0.5) {
            b.edge(x, *c.choose(&mut r).unwrap());
        }
    }
    b.finish(&mut r, k)
}

pub type Family = fn(u64) -> Instance;

pub const FAMILIES: [(&str, Family); 15] = [
    ("thick_edges", thick_edges),
    ("shielded_hub", shielded_hub),
    ("split_cliques", split_cliques),
    ("multi_chain", multi_chain),
    ("flower_hub", flower_hub),
    ("blob_hub", blob_hub),
    ("lonely_trees", lonely_trees),
    ("blocked_trees", blocked_trees),
    ("clique_crowd", clique_crowd),
    ("dense_star", dense_star),
    ("dense_mess", dense_mess),
    ("dense_hub_with_trees", dense_hub_with_trees),
    ("multi_edges", multi_edges),
    ("threads", threads),
    ("mixed", super::mixed_instance),
];
