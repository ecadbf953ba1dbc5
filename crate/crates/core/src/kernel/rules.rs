//! Triggers and actions of the nineteen reduction rules.
//!
//! Each trigger assumes every lower-numbered rule is inapplicable, which is
//! what the scheduler guarantees. Vertices and components are scanned in
//! ascending order so the chosen firing is deterministic.

use std::collections::BTreeSet;

use crate::kernel::{Context, Edit, Firing, RuleId, RuleOutcome, SolutionMode};
use crate::multigraph::{Instance, MultiGraph, VertexId};
use crate::structure::p3::p3_star_exceeds;
use crate::structure::{q_expansion, FlowerOrBlocker};

/// Fires `rule` on `inst` if its trigger holds, computing `S` exactly.
pub fn apply_rule(inst: &Instance, rule: RuleId) -> Option<RuleOutcome> {
    let mut ctx = Context::new(inst, SolutionMode::Exact, None);
    find_firing(&mut ctx, rule).map(|f| f.apply(inst))
}

/// The firing of `rule` in the current context, if its trigger holds.
pub fn find_firing(ctx: &mut Context<'_>, rule: RuleId) -> Option<Firing> {
    if ctx.k() == 0 {
        return None;
    }
    match rule.number() {
        1 => r1(ctx),
        2 => r2(ctx),
        3 => r3(ctx),
        4 => r4(ctx),
        5 => r5(ctx),
        6 => r6(ctx),
        7 => r7(ctx),
        8 => r8(ctx),
        9 => r9(ctx),
        10 => r10(ctx),
        11 => r11(ctx),
        12 => r12(ctx),
        13 => r13(ctx),
        14 => r14(ctx),
        15 => r15(ctx),
        16 => r16(ctx),
        17 => r17(ctx),
        18 => r18(ctx),
        19 => r19(ctx),
        _ => unreachable!(),
    }
}

fn rule(n: u8) -> RuleId {
    RuleId::new(n).expect("valid rule number")
}

/// Deletes `vs` and lowers `k` by `|vs|`, or answers no when the budget runs out.
fn take(ctx: &Context<'_>, n: u8, vs: Vec<VertexId>) -> Firing {
    let k = ctx.k();
    if vs.len() > k {
        return decide(ctx, n, false);
    }
    Firing {
        rule: rule(n),
        k_before: k,
        k_after: k - vs.len(),
        edits: vs.into_iter().map(Edit::DeleteVertex).collect(),
    }
}

/// Deletes `vs` without touching `k`.
fn drop_vertices(ctx: &Context<'_>, n: u8, vs: impl IntoIterator<Item = VertexId>) -> Firing {
    Firing {
        rule: rule(n),
        k_before: ctx.k(),
        k_after: ctx.k(),
        edits: vs.into_iter().map(Edit::DeleteVertex).collect(),
    }
}

fn decide(ctx: &Context<'_>, n: u8, answer: bool) -> Firing {
    Firing {
        rule: rule(n),
        k_before: ctx.k(),
        k_after: ctx.k(),
        edits: vec![Edit::Answer(answer)],
    }
}

fn large_sparse(ctx: &Context<'_>) -> Vec<VertexId> {
    ctx.partition().large_sparse.iter().copied().collect()
}

fn r1(ctx: &mut Context<'_>) -> Option<Firing> {
    for v in large_sparse(ctx) {
        if let FlowerOrBlocker::Flower(_) = ctx.gallai(v) {
            return Some(take(ctx, 1, vec![v]));
        }
    }
    None
}

fn r2(ctx: &mut Context<'_>) -> Option<Firing> {
    let k = ctx.k();
    for v in large_sparse(ctx) {
        if ctx.sparse_view(v).is_some_and(|view| view.nontrees.len() > k) {
            return Some(take(ctx, 2, vec![v]));
        }
    }
    None
}

fn r3(ctx: &mut Context<'_>) -> Option<Firing> {
    let inst = ctx.inst;
    let g = &inst.graph;
    for v in large_sparse(ctx) {
        let Some(view) = ctx.sparse_view(v) else { continue };
        let lonely = view.trees.iter().find(|c| {
            !c.vertices
                .iter()
                .any(|&x| g.neighbors(x).any(|(y, _)| view.blocker.contains(&y)))
        });
        if let Some(c) = lonely {
            let vs = c.vertices.clone();
            return Some(drop_vertices(ctx, 3, vs));
        }
    }
    None
}

fn r4(ctx: &mut Context<'_>) -> Option<Firing> {
    let inst = ctx.inst;
    let g = &inst.graph;
    let k = ctx.k();
    for v in large_sparse(ctx) {
        let Some(view) = ctx.sparse_view(v) else { continue };
        if view.trees.len() < 4 * k {
            continue;
        }
        // components become leaves numbered past every vertex id
        let base = g.id_bound();
        let heads = view.blocker.clone();
        let leaves: BTreeSet<VertexId> = (0..view.trees.len()).map(|i| base + i).collect();
        let mut edges = Vec::new();
        for (i, c) in view.trees.iter().enumerate() {
            let seen: BTreeSet<VertexId> = c
                .vertices
                .iter()
                .flat_map(|&x| g.neighbors(x).map(|(y, _)| y))
                .filter(|y| heads.contains(y))
                .collect();
            edges.extend(seen.into_iter().map(|b| (b, base + i)));
        }
        let Ok(exp) = q_expansion(&heads, &leaves, &edges, 2) else {
            continue;
        };
        let mut edits = Vec::new();
        for leaf in &exp.leaves {
            let c = &view.trees[leaf - base];
            for &x in &c.vertices {
                if g.has_edge(v, x) {
                    edits.push(Edit::SetMultiplicity(v.min(x), v.max(x), 0));
                }
            }
        }
        for &b in &exp.heads {
            let m = g.multiplicity(v, b).max(2);
            edits.push(Edit::SetMultiplicity(v.min(b), v.max(b), m));
        }
        return Some(Firing {
            rule: rule(4),
            k_before: k,
            k_after: k,
            edits,
        });
    }
    None
}

fn r5(ctx: &mut Context<'_>) -> Option<Firing> {
    let too_big = match ctx.solution() {
        None => true,
        Some(s) => s.len() > 4 * ctx.k(),
    };
    too_big.then(|| decide(ctx, 5, false))
}

fn r6(ctx: &mut Context<'_>) -> Option<Firing> {
    let s = ctx.solution()?;
    for &v in &ctx.partition().large_dense {
        if s.contains(&v) {
            continue;
        }
        let in_tree = ctx.rest_components().iter().any(|c| c.contains(v) && c.is_tree());
        if in_tree {
            return Some(take(ctx, 6, vec![v]));
        }
    }
    None
}

fn r7(ctx: &mut Context<'_>) -> Option<Firing> {
    let good = ctx.inst.graph.components().into_iter().find(|c| c.kind.is_good())?;
    Some(drop_vertices(ctx, 7, good.vertices))
}

fn r8(ctx: &mut Context<'_>) -> Option<Firing> {
    let s = ctx.solution()?.clone();
    if s.is_empty() {
        return None;
    }
    let inst = ctx.inst;
    let g = &inst.graph;
    let cliques: Vec<_> = ctx
        .big_cliques()
        .into_iter()
        .filter(|c| c.vertices.iter().any(|&x| g.neighbors(x).any(|(y, _)| s.contains(&y))))
        .collect();
    if cliques.len() < 2 * s.len() {
        return None;
    }
    let base = g.id_bound();
    let leaves: BTreeSet<VertexId> = (0..cliques.len()).map(|i| base + i).collect();
    let mut edges = Vec::new();
    for (i, c) in cliques.iter().enumerate() {
        let seen: BTreeSet<VertexId> = c
            .vertices
            .iter()
            .flat_map(|&x| g.neighbors(x).map(|(y, _)| y))
            .filter(|y| s.contains(y))
            .collect();
        edges.extend(seen.into_iter().map(|b| (b, base + i)));
    }
    let exp = q_expansion(&s, &leaves, &edges, 2).ok()?;
    Some(take(ctx, 8, exp.heads.into_iter().collect()))
}

fn r9(ctx: &mut Context<'_>) -> Option<Firing> {
    let dense = &ctx.partition().large_dense;
    let inst = ctx.inst;
    let g = &inst.graph;
    let k = ctx.k();
    let v = dense
        .iter()
        .copied()
        .find(|&v| p3_star_exceeds(g, v, dense, k).expect("dense vertex"))?;
    Some(take(ctx, 9, vec![v]))
}

fn r10(ctx: &mut Context<'_>) -> Option<Firing> {
    let k = ctx.k();
    (ctx.packing().len() > k * k).then(|| decide(ctx, 10, false))
}

fn multi_degree(g: &MultiGraph, v: VertexId) -> usize {
    g.neighbors(v).filter(|&(_, m)| m >= 2).count()
}

fn r11(ctx: &mut Context<'_>) -> Option<Firing> {
    let inst = ctx.inst;
    let g = &inst.graph;
    let v = g.vertices().find(|&v| multi_degree(g, v) > ctx.k())?;
    Some(take(ctx, 11, vec![v]))
}

fn r12(ctx: &mut Context<'_>) -> Option<Firing> {
    let k = ctx.k();
    (ctx.inst.graph.multi_edges().count() > k * k).then(|| decide(ctx, 12, false))
}

fn r13(ctx: &mut Context<'_>) -> Option<Firing> {
    let inst = ctx.inst;
    let g = &inst.graph;
    let k = ctx.k();
    let dense = &ctx.partition().large_dense;
    let packed = ctx.packing().vertices();
    let modular: BTreeSet<VertexId> = dense.difference(&packed).copied().collect();
    for comp in g.induced_subgraph(&modular).components() {
        let quiet: Vec<VertexId> = comp
            .vertices
            .iter()
            .copied()
            .filter(|&u| g.neighbors(u).all(|(w, m)| m == 1 && dense.contains(&w)))
            .collect();
        if quiet.len() >= k + 4 {
            let v = *quiet.last().expect("nonempty");
            return Some(drop_vertices(ctx, 13, [v]));
        }
    }
    None
}

fn r14(ctx: &mut Context<'_>) -> Option<Firing> {
    let s = ctx.solution()?;
    let k = ctx.k();
    let inst = ctx.inst;
    let g = &inst.graph;
    let trees = ctx.tree_vertices();
    let v = ctx
        .partition()
        .large_dense
        .iter()
        .copied()
        .filter(|v| s.contains(v))
        .find(|&v| g.neighbors(v).filter(|(u, _)| trees.contains(u)).count() >= 2 * k + 4)?;
    Some(take(ctx, 14, vec![v]))
}

fn degree(g: &MultiGraph, v: VertexId) -> usize {
    g.degree(v).expect("vertex present")
}

fn r15(ctx: &mut Context<'_>) -> Option<Firing> {
    let inst = ctx.inst;
    let g = &inst.graph;
    for v in g.vertices() {
        let pendants: Vec<VertexId> = g.neighbors(v).map(|(u, _)| u).filter(|&u| degree(g, u) == 1).collect();
        if pendants.len() >= 2 {
            return Some(drop_vertices(ctx, 15, [*pendants.last().expect("nonempty")]));
        }
    }
    None
}

fn r16(ctx: &mut Context<'_>) -> Option<Firing> {
    let (u, v, _) = ctx.inst.graph.edges().find(|e| e.2 >= 3)?;
    Some(Firing {
        rule: rule(16),
        k_before: ctx.k(),
        k_after: ctx.k(),
        edits: vec![Edit::SetMultiplicity(u, v, 2)],
    })
}

/// The neighbor of `v` other than `not`, for a vertex of degree two with single edges.
fn other_neighbor(g: &MultiGraph, v: VertexId, not: VertexId) -> Option<VertexId> {
    g.neighbors(v).map(|(u, _)| u).find(|&u| u != not)
}

fn r17(ctx: &mut Context<'_>) -> Option<Firing> {
    let inst = ctx.inst;
    let g = &inst.graph;
    for v3 in g.vertices() {
        if degree(g, v3) != 1 {
            continue;
        }
        let (v2, _) = g.neighbors(v3).next().expect("pendant has a neighbor");
        if degree(g, v2) != 2 {
            continue;
        }
        if let Some(v1) = other_neighbor(g, v2, v3) {
            if !g.has_edge(v1, v3) {
                return Some(drop_vertices(ctx, 17, [v3]));
            }
        }
    }
    None
}

fn r18(ctx: &mut Context<'_>) -> Option<Firing> {
    let inst = ctx.inst;
    let g = &inst.graph;
    for v3 in g.vertices() {
        if degree(g, v3) != 2 {
            continue;
        }
        let nbrs: Vec<VertexId> = g.neighbors(v3).map(|(u, _)| u).collect();
        let &[v2, v4] = nbrs.as_slice() else { continue };
        if degree(g, v2) != 2 || degree(g, v4) != 2 {
            continue;
        }
        let (Some(v1), Some(v5)) = (other_neighbor(g, v2, v3), other_neighbor(g, v4, v3)) else {
            continue;
        };
        let all: BTreeSet<VertexId> = [v1, v2, v3, v4, v5].into_iter().collect();
        if all.len() == 5 {
            return Some(Firing {
                rule: rule(18),
                k_before: ctx.k(),
                k_after: ctx.k(),
                edits: vec![Edit::DeleteVertex(v3), Edit::SetMultiplicity(v2.min(v4), v2.max(v4), 1)],
            });
        }
    }
    None
}

fn r19(ctx: &mut Context<'_>) -> Option<Firing> {
    let inst = ctx.inst;
    let g = &inst.graph;
    for v1 in g.vertices() {
        if degree(g, v1) != 3 {
            continue;
        }
        let nbrs: Vec<VertexId> = g.neighbors(v1).map(|(u, _)| u).collect();
        if nbrs.len() != 3 {
            continue;
        }
        let independent = (0..3).all(|i| (i + 1..3).all(|j| !g.has_edge(nbrs[i], nbrs[j])));
        if !independent {
            continue;
        }
        if let Some(&v4) = nbrs.iter().find(|&&u| degree(g, u) == 1) {
            return Some(drop_vertices(ctx, 19, [v4]));
        }
    }
    None
}
