mod common;

use std::collections::BTreeSet;

use common::{brute_ldtp, gnp, random_subset, random_tree, rng};
use cotvd::error::CycleError;
use cotvd::longest_cycle::{
    label_components, longest_cycle, longest_cycle_with, q_value, tree_dp_tables, CycleOptions, LdtpInstance,
};
use cotvd::multigraph::{MultiGraph, VertexId};
use cotvd::par::Parallelism;
use cotvd::solvers::{brute_force_longest_cycle, minimum_ctov};
use rand::Rng;

fn set(xs: &[VertexId]) -> BTreeSet<VertexId> {
    xs.iter().copied().collect()
}

#[test]
fn q_value_cases() {
    // S = {0, 1}; a K3 on {2, 3, 4} and a path 5-6-7
    let mut edges = common::clique_edges(&[2, 3, 4]);
    edges.extend([(5, 6), (6, 7), (0, 2), (1, 2), (0, 3), (1, 4), (0, 5), (1, 7)]);
    let g = MultiGraph::from_edges(8, &edges).unwrap();
    let s = set(&[0, 1]);
    let comps = g.components_without(&s);
    let clique = comps.iter().find(|c| c.contains(2)).unwrap();
    let path = comps.iter().find(|c| c.contains(5)).unwrap();
    assert_eq!(q_value(&g, clique, 0, 1).unwrap(), Some(4));
    assert_eq!(q_value(&g, path, 0, 1).unwrap(), Some(4));
    // the self pair counts the walk 0-5-0; the driver excludes it later
    assert_eq!(q_value(&g, path, 0, 0).unwrap(), Some(2));
    assert_eq!(q_value(&g, clique, 0, 6).unwrap(), None);

    // only one shared neighbor in a clique
    let g2 = MultiGraph::from_edges(5, &[(2, 3), (3, 4), (2, 4), (0, 2), (1, 2)]).unwrap();
    let c = g2.component_of(2).unwrap();
    let c = g2.classify_set(&c.vertices.iter().copied().filter(|v| *v >= 2).collect());
    assert_eq!(q_value(&g2, &c, 0, 1).unwrap(), Some(2));

    let labels = label_components(&g, &s).unwrap();
    assert!(labels.labels.get(&(0, 1)).is_some_and(|l| !l.is_empty()));
}

#[test]
fn driver_examples_and_errors() {
    let c5 = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
    assert_eq!(longest_cycle(&c5, &set(&[0])).unwrap(), Some(5));
    assert_eq!(longest_cycle(&c5, &set(&[])), Err(CycleError::InfeasibleModulator));
    let tree = random_tree(&mut rng(1), 7);
    assert_eq!(longest_cycle(&tree, &set(&[])).unwrap(), None);
    let mut multi = c5.clone();
    multi.set_multiplicity(0, 1, 2).unwrap();
    assert_eq!(longest_cycle(&multi, &set(&[0])), Err(CycleError::NotSimple(0, 1)));
    assert!(longest_cycle(&c5, &set(&[9])).is_err());
}

/// Random LDTP instance on a random tree with `n` vertices.
fn tree_instance(seed: u64) -> LdtpInstance {
    let mut r = rng(seed);
    let n = r.gen_range(1..=7);
    let tree = random_tree(&mut r, n);
    let l = r.gen_range(1..=3);
    let vs: Vec<VertexId> = (0..n).collect();
    let pairs = (0..l)
        .map(|_| (random_subset(&mut r, &vs, 0.4), random_subset(&mut r, &vs, 0.4)))
        .collect();
    let mut inst = LdtpInstance::new(tree, pairs);
    inst.min_edges = (0..l).map(|_| r.gen_bool(0.3)).collect();
    inst
}

#[test]
fn tree_tables_match_their_definitions() {
    for seed in 0..400 {
        let inst = tree_instance(seed);
        let tables = tree_dp_tables(&inst).unwrap();
        let l = inst.pairs.len();
        for v in inst.host.vertices() {
            let sub = tables.subtree(v);
            let h = inst.host.induced_subgraph(&sub);
            let clip = |s: &BTreeSet<VertexId>| s.intersection(&sub).copied().collect::<BTreeSet<_>>();
            for z in 0..1usize << l {
                let idx: Vec<usize> = (0..l).filter(|i| z >> i & 1 == 1).collect();
                let pairs: Vec<_> = idx
                    .iter()
                    .map(|&i| (clip(&inst.pairs[i].0), clip(&inst.pairs[i].1)))
                    .collect();
                let mins: Vec<bool> = idx.iter().map(|&i| inst.min_edges[i]).collect();
                assert_eq!(
                    tables.dp2(v, z),
                    brute_ldtp(&h, &pairs, &mins),
                    "seed {seed} v {v} z {z}"
                );
                for i in (0..l).filter(|i| z >> i & 1 == 0) {
                    for side in [1, 2] {
                        let from = if side == 1 { &inst.pairs[i].0 } else { &inst.pairs[i].1 };
                        let mut with = pairs.clone();
                        with.push((clip(from), set(&[v])));
                        let mut m = mins.clone();
                        m.push(false);
                        assert_eq!(
                            tables.dp1(v, z, i, side),
                            brute_ldtp(&h, &with, &m),
                            "seed {seed} v {v} z {z} i {i} side {side}"
                        );
                    }
                }
            }
        }
        let full = (1usize << l) - 1;
        assert_eq!(
            tables.dp2(tables.root(), full),
            cotvd::longest_cycle::ldtp_tree(&inst).unwrap()
        );
    }
}

#[test]
fn driver_matches_enumeration_across_sets_and_modes() {
    for seed in 0..200 {
        let mut r = rng(seed);
        let n = r.gen_range(3..=11);
        let p = r.gen_range(0.15..0.5);
        let g = gnp(&mut r, n, p, 0.0);
        let s = minimum_ctov(&g);
        if s.len() > 3 {
            continue;
        }
        let want = brute_force_longest_cycle(&g, 14).unwrap();
        let mut sets = vec![s.clone()];
        // adding vertices keeps the set feasible
        let rest: Vec<VertexId> = g.vertices().filter(|v| !s.contains(v)).collect();
        for extra in rest.iter().take(2) {
            let mut t = s.clone();
            t.insert(*extra);
            sets.push(t);
        }
        for t in &sets {
            for restrict_to_labels in [true, false] {
                for parallelism in [Parallelism::Sequential, Parallelism::Parallel] {
                    let opts = CycleOptions {
                        restrict_to_labels,
                        parallelism,
                    };
                    assert_eq!(longest_cycle_with(&g, t, &opts).unwrap(), want, "seed {seed} S {t:?}");
                }
            }
        }
    }
}
