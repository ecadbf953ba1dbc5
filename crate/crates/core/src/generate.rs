//! Seeded instances with a planted solution.
//!
//! The random source is ChaCha8 (`rand_chacha::ChaCha8Rng`), so a seed gives
//! the same instance on every platform.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::multigraph::{Instance, MultiGraph, VertexId};

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub seed: u64,
    /// Hub vertices attached to the cliques and trees.
    pub planted: usize,
    pub cliques: usize,
    pub clique_size: RangeInclusive<usize>,
    pub trees: usize,
    pub tree_size: RangeInclusive<usize>,
    /// Tree-plus-chords components; each one adds its chord center to the planted set.
    pub noise: usize,
    pub noise_size: RangeInclusive<usize>,
    /// Probability that a hub is joined to a given vertex (and to another hub).
    pub density: f64,
    /// Probability that a hub edge gets multiplicity 2 or 3.
    pub multi: f64,
    /// Budget of the instance; the planted set size when `None`.
    pub k: Option<usize>,
}

impl Default for GeneratorSpec {
    fn default() -> Self {
        GeneratorSpec {
            seed: 0,
            planted: 2,
            cliques: 2,
            clique_size: 3..=5,
            trees: 2,
            tree_size: 3..=6,
            noise: 0,
            noise_size: 4..=6,
            density: 0.3,
            multi: 0.0,
            k: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub instance: Instance,
    /// Deleting this set leaves only cliques and trees.
    pub planted: BTreeSet<VertexId>,
}

fn random_tree(rng: &mut ChaCha8Rng, edges: &mut Vec<(VertexId, VertexId, u32)>, base: usize, n: usize) {
    for i in 1..n {
        let p = rng.gen_range(0..i);
        edges.push((base + p, base + i, 1));
    }
}

fn size(rng: &mut ChaCha8Rng, r: &RangeInclusive<usize>) -> usize {
    if r.is_empty() {
        *r.start()
    } else {
        rng.gen_range(r.clone())
    }
}

pub fn generate(spec: &GeneratorSpec) -> Generated {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut edges: Vec<(VertexId, VertexId, u32)> = Vec::new();
    let hubs: Vec<VertexId> = (0..spec.planted).collect();
    let mut planted: BTreeSet<VertexId> = hubs.iter().copied().collect();
    let mut next = spec.planted;
    let mut body = Vec::new();

    for _ in 0..spec.cliques {
        let n = size(&mut rng, &spec.clique_size);
        for a in 0..n {
            for b in a + 1..n {
                edges.push((next + a, next + b, 1));
            }
        }
        body.extend(next..next + n);
        next += n;
    }
    for _ in 0..spec.trees {
        let n = size(&mut rng, &spec.tree_size);
        random_tree(&mut rng, &mut edges, next, n);
        body.extend(next..next + n);
        next += n;
    }
    for _ in 0..spec.noise {
        let n = size(&mut rng, &spec.noise_size).max(2);
        random_tree(&mut rng, &mut edges, next, n);
        let center = next + rng.gen_range(0..n);
        for x in next..next + n {
            if x != center
                && rng.gen_bool(0.5)
                && !edges.iter().any(|&(a, b, _)| (a, b) == (center.min(x), center.max(x)))
            {
                edges.push((center.min(x), center.max(x), 1));
            }
        }
        planted.insert(center);
        next += n;
    }

    let mut hub_edge = |rng: &mut ChaCha8Rng, a: VertexId, b: VertexId| {
        let m = if rng.gen_bool(spec.multi) {
            rng.gen_range(2..=3)
        } else {
            1
        };
        edges.push((a.min(b), a.max(b), m));
    };
    for (i, &h) in hubs.iter().enumerate() {
        for &x in &body {
            if rng.gen_bool(spec.density) {
                hub_edge(&mut rng, h, x);
            }
        }
        for &h2 in &hubs[i + 1..] {
            if rng.gen_bool(spec.density) {
                hub_edge(&mut rng, h, h2);
            }
        }
    }

    let mut perm: Vec<VertexId> = (0..next).collect();
    perm.shuffle(&mut rng);
    let mut g = MultiGraph::new(next);
    for (a, b, m) in edges {
        g.add_edge(perm[a], perm[b], m).expect("generated edges are valid");
    }
    let planted: BTreeSet<VertexId> = planted.into_iter().map(|v| perm[v]).collect();
    let k = spec.k.unwrap_or(planted.len());
    Generated {
        instance: Instance::new(g, k),
        planted,
    }
}
