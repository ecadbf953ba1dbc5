//! Longest Disjoint Terminal Paths on a clique or a tree.
//!
//! Lengths count edges, so a single-vertex path has length 0.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::CycleError;
use crate::multigraph::{Component, MultiGraph, VertexId};
use crate::structure::hopcroft_karp;

/// `pairs[i] = (V_i1, V_i2)`; `min_edges[i]` forbids a single-vertex path for index `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LdtpInstance {
    pub host: MultiGraph,
    pub pairs: Vec<(BTreeSet<VertexId>, BTreeSet<VertexId>)>,
    pub min_edges: Vec<bool>,
}

impl LdtpInstance {
    pub fn new(host: MultiGraph, pairs: Vec<(BTreeSet<VertexId>, BTreeSet<VertexId>)>) -> Self {
        let min_edges = vec![false; pairs.len()];
        LdtpInstance { host, pairs, min_edges }
    }
}

/// Terminal sets as membership vectors over local vertex indices.
pub(crate) type LocalPair = (Vec<bool>, Vec<bool>);

/// A clique or tree with vertices renumbered `0..n`.
#[derive(Clone, Debug)]
pub(crate) struct Host {
    pub verts: Vec<VertexId>,
    pub index: BTreeMap<VertexId, usize>,
    pub adj: Vec<Vec<usize>>,
}

impl Host {
    pub fn new(g: &MultiGraph, comp: &Component) -> Self {
        let verts = comp.vertices.clone();
        let index: BTreeMap<VertexId, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let adj = verts
            .iter()
            .map(|&v| g.neighbors(v).filter_map(|(u, _)| index.get(&u).copied()).collect())
            .collect();
        Host { verts, index, adj }
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn mask<I: IntoIterator<Item = VertexId>>(&self, vs: I) -> Result<Vec<bool>, CycleError> {
        let mut m = vec![false; self.len()];
        for v in vs {
            let i = *self.index.get(&v).ok_or(CycleError::StrayTerminal(v))?;
            m[i] = true;
        }
        Ok(m)
    }
}

fn prepare(inst: &LdtpInstance, want_clique: bool) -> Result<(Host, Vec<LocalPair>), CycleError> {
    let comps = inst.host.components();
    let ok = match comps.as_slice() {
        [] => true,
        [c] => {
            if want_clique {
                c.is_clique()
            } else {
                c.is_tree()
            }
        }
        _ => false,
    };
    if !ok {
        return Err(CycleError::BadComponent);
    }
    let host = match comps.first() {
        Some(c) => Host::new(&inst.host, c),
        None => Host {
            verts: Vec::new(),
            index: BTreeMap::new(),
            adj: Vec::new(),
        },
    };
    let pairs = inst
        .pairs
        .iter()
        .map(|(a, b)| Ok((host.mask(a.iter().copied())?, host.mask(b.iter().copied())?)))
        .collect::<Result<Vec<_>, CycleError>>()?;
    Ok((host, pairs))
}

/// Clique LDTP by guessing which paths have an edge and matching endpoints.
pub fn ldtp_clique(inst: &LdtpInstance) -> Result<Option<usize>, CycleError> {
    let (host, pairs) = prepare(inst, true)?;
    Ok(solve_clique(host.len(), &pairs, &inst.min_edges))
}

/// Tree LDTP by the rooted subset DP.
pub fn ldtp_tree(inst: &LdtpInstance) -> Result<Option<usize>, CycleError> {
    let (host, pairs) = prepare(inst, false)?;
    Ok(solve_tree(&host.adj, &pairs, &inst.min_edges))
}

pub(crate) fn solve_clique(n: usize, pairs: &[LocalPair], min_edges: &[bool]) -> Option<usize> {
    let l = pairs.len();
    assert!(l < 32, "too many terminal pairs");
    let mut zero_ok = false;
    for f in 0u32..(1 << l) {
        if (0..l).any(|i| min_edges[i] && f & (1 << i) == 0) {
            continue;
        }
        let mut family: Vec<Vec<usize>> = Vec::new();
        for (i, (a, b)) in pairs.iter().enumerate() {
            if f & (1 << i) == 0 {
                family.push((0..n).filter(|&x| a[x] && b[x]).collect());
            } else {
                family.push((0..n).filter(|&x| a[x]).collect());
                family.push((0..n).filter(|&x| b[x]).collect());
            }
        }
        if family.len() > n || family.iter().any(|d| d.is_empty()) {
            continue;
        }
        if hopcroft_karp(n, &family).size == family.len() {
            if f != 0 {
                return Some(n - l);
            }
            zero_ok = true;
        }
    }
    zero_ok.then_some(0)
}

const NEG: i64 = i64::MIN / 4;

fn plus(a: i64, b: i64) -> i64 {
    if a == NEG || b == NEG {
        NEG
    } else {
        a + b
    }
}

/// DP tables of the tree solver, indexed by local vertex.
#[derive(Clone, Debug)]
pub(crate) struct TreeTables {
    pub l: usize,
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    /// `dp1[v][(z * l + i) * 2 + f]` with `f` in `{0, 1}` standing for sides 1 and 2.
    pub dp1: Vec<Vec<i64>>,
    pub dp2: Vec<Vec<i64>>,
}

impl TreeTables {
    fn at1(&self, v: usize, z: usize, i: usize, f: usize) -> i64 {
        self.dp1[v][(z * self.l + i) * 2 + f]
    }
}

pub(crate) fn solve_tree(adj: &[Vec<usize>], pairs: &[LocalPair], min_edges: &[bool]) -> Option<usize> {
    if adj.is_empty() {
        return pairs.is_empty().then_some(0);
    }
    let t = tree_tables(adj, pairs, min_edges);
    let full = (1usize << t.l) - 1;
    let best = t.dp2[t.root][full];
    (best != NEG).then_some(best as usize)
}

pub(crate) fn tree_tables(adj: &[Vec<usize>], pairs: &[LocalPair], min_edges: &[bool]) -> TreeTables {
    let n = adj.len();
    let l = pairs.len();
    assert!(l < 32, "too many terminal pairs");
    let subsets = 1usize << l;
    let root = 0;

    let mut parent = vec![None; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut stack = vec![root];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &c in &adj[v] {
            if !seen[c] {
                seen[c] = true;
                parent[c] = Some(v);
                stack.push(c);
            }
        }
    }

    let side = |i: usize, f: usize, v: usize| if f == 0 { pairs[i].0[v] } else { pairs[i].1[v] };
    let idx1 = |z: usize, i: usize, f: usize| (z * l + i) * 2 + f;
    let mut dp1 = vec![Vec::new(); n];
    let mut dp2 = vec![Vec::new(); n];

    for &v in order.iter().rev() {
        let mut aux0 = vec![NEG; subsets];
        aux0[0] = 0;
        let mut aux1 = vec![NEG; subsets * l * 2];
        for i in 0..l {
            for f in 0..2 {
                if side(i, f, v) {
                    aux1[idx1(0, i, f)] = 0;
                }
            }
        }
        let mut aux2 = vec![NEG; subsets];
        aux2[0] = 0;
        for i in 0..l {
            if pairs[i].0[v] && pairs[i].1[v] && !min_edges[i] {
                aux2[1 << i] = 0;
            }
        }

        for &c in adj[v].iter().filter(|&&c| parent[c] == Some(v)) {
            let (c1, c2) = (&dp1[c], &dp2[c]);
            let mut n0 = vec![NEG; subsets];
            let mut n1 = vec![NEG; subsets * l * 2];
            let mut n2 = vec![NEG; subsets];
            for z in 0..subsets {
                // every z' ⊆ z, including z itself and the empty set
                let mut sub = z;
                loop {
                    let rest = z & !sub;
                    n0[z] = n0[z].max(plus(aux0[sub], c2[rest]));
                    n2[z] = n2[z].max(plus(aux2[sub], c2[rest]));
                    for i in (0..l).filter(|&i| z & (1 << i) == 0) {
                        for f in 0..2 {
                            let via_old = plus(aux1[idx1(sub, i, f)], c2[rest]);
                            let via_child = plus(plus(aux0[sub], c1[idx1(rest, i, f)]), 1);
                            let slot = &mut n1[idx1(z, i, f)];
                            *slot = (*slot).max(via_old).max(via_child);
                        }
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & z;
                }
                // one path of z runs through the edge v-c
                for i in (0..l).filter(|&i| z & (1 << i) != 0) {
                    let zi = z & !(1 << i);
                    let mut sub = zi;
                    loop {
                        let rest = zi & !sub;
                        for f in 0..2 {
                            let joined = plus(plus(aux1[idx1(sub, i, f)], c1[idx1(rest, i, 1 - f)]), 1);
                            n2[z] = n2[z].max(joined);
                        }
                        if sub == 0 {
                            break;
                        }
                        sub = (sub - 1) & zi;
                    }
                }
            }
            aux0 = n0;
            aux1 = n1;
            aux2 = n2;
        }
        dp1[v] = aux1;
        dp2[v] = aux2;
    }
    TreeTables {
        l,
        root,
        parent,
        dp1,
        dp2,
    }
}

/// Public view of the tree DP, for checking table entries against their definitions.
#[derive(Clone, Debug)]
pub struct TreeDpTables {
    host: Host,
    tables: TreeTables,
}

impl TreeDpTables {
    pub fn root(&self) -> VertexId {
        self.host.verts[self.tables.root]
    }

    /// Vertices of the subtree rooted at `v`.
    pub fn subtree(&self, v: VertexId) -> BTreeSet<VertexId> {
        let Some(&lv) = self.host.index.get(&v) else {
            return BTreeSet::new();
        };
        (0..self.host.len())
            .filter(|&x| {
                let mut cur = Some(x);
                while let Some(y) = cur {
                    if y == lv {
                        return true;
                    }
                    cur = self.tables.parent[y];
                }
                false
            })
            .map(|x| self.host.verts[x])
            .collect()
    }

    /// `DP_2[v][z]`: best packing of proper paths for the indices in bitmask `z`
    /// inside the subtree of `v`.
    pub fn dp2(&self, v: VertexId, z: usize) -> Option<usize> {
        let x = self.tables.dp2[self.host.index[&v]][z];
        (x != NEG).then_some(x as usize)
    }

    /// `DP_1[v][z][i][side]` with `side` in `{1, 2}`: as `dp2` plus a path for
    /// index `i` from `V_{i,side}` ending at `v`.
    pub fn dp1(&self, v: VertexId, z: usize, i: usize, side: usize) -> Option<usize> {
        assert!(side == 1 || side == 2, "side is 1 or 2");
        let x = self.tables.at1(self.host.index[&v], z, i, side - 1);
        (x != NEG).then_some(x as usize)
    }
}

/// Runs the tree DP and keeps every table.
pub fn tree_dp_tables(inst: &LdtpInstance) -> Result<TreeDpTables, CycleError> {
    let (host, pairs) = prepare(inst, false)?;
    if host.len() == 0 {
        return Err(CycleError::BadComponent);
    }
    let tables = tree_tables(&host.adj, &pairs, &inst.min_edges);
    Ok(TreeDpTables { host, tables })
}
