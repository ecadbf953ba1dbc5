//! Derived structures the rule triggers read, computed on first use.

use std::cell::OnceCell;
use std::collections::{BTreeMap, BTreeSet};

use crate::kernel::partition::{partition_vertices, Partition};
use crate::multigraph::{Component, ComponentKind, Instance, VertexId};
use crate::solvers::{approx_ctov, exact_ctov};
use crate::structure::{gallai_flower_or_blocker, maximal_p3_packing, FlowerOrBlocker, P3Packing};

/// How the feasible set `S` used by the middle rules is obtained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SolutionMode {
    /// Minimum solution within budget `k`.
    #[default]
    Exact,
    /// Greedy set, replaced by the exact one when larger than `4k`.
    Approx,
}

/// Per-vertex view around a large-sparse vertex with a blocker `B`.
#[derive(Clone, Debug)]
pub struct SparseView {
    pub blocker: BTreeSet<VertexId>,
    /// Tree components of `G - v - B` adjacent to `v`.
    pub trees: Vec<Component>,
    /// Other components of `G - v - B` adjacent to `v`.
    pub nontrees: Vec<Component>,
}

pub struct Context<'a> {
    pub inst: &'a Instance,
    mode: SolutionMode,
    hint: Option<&'a BTreeSet<VertexId>>,
    partition: OnceCell<Partition>,
    solution: OnceCell<Option<BTreeSet<VertexId>>>,
    gallai: BTreeMap<VertexId, FlowerOrBlocker>,
    views: BTreeMap<VertexId, SparseView>,
    packing: OnceCell<P3Packing>,
    rest_components: OnceCell<Vec<Component>>,
}

impl<'a> Context<'a> {
    /// `hint` is a previously used `S`; it is reused when it is still a
    /// feasible solution of size at most `k`.
    pub fn new(inst: &'a Instance, mode: SolutionMode, hint: Option<&'a BTreeSet<VertexId>>) -> Self {
        Context {
            inst,
            mode,
            hint,
            partition: OnceCell::new(),
            solution: OnceCell::new(),
            gallai: BTreeMap::new(),
            views: BTreeMap::new(),
            packing: OnceCell::new(),
            rest_components: OnceCell::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.inst.k
    }

    pub fn partition(&self) -> &Partition {
        self.partition.get_or_init(|| partition_vertices(self.inst))
    }

    /// The feasible set `S`, or `None` when no solution of size `k` exists.
    pub fn solution(&self) -> Option<&BTreeSet<VertexId>> {
        self.solution
            .get_or_init(|| {
                let g = &self.inst.graph;
                let k = self.inst.k;
                if let Some(h) = self.hint {
                    let alive: BTreeSet<VertexId> = h.iter().copied().filter(|&v| g.contains(v)).collect();
                    if alive.len() <= k && g.is_feasible_deletion(&alive) {
                        return Some(alive);
                    }
                }
                match self.mode {
                    SolutionMode::Exact => exact_ctov(g, k),
                    SolutionMode::Approx => {
                        let s = approx_ctov(g);
                        if s.len() <= 4 * k {
                            Some(s)
                        } else {
                            exact_ctov(g, k)
                        }
                    }
                }
            })
            .as_ref()
    }

    /// Whether `S` has been computed in this context.
    pub fn solution_if_computed(&self) -> Option<&BTreeSet<VertexId>> {
        self.solution.get().and_then(|s| s.as_ref())
    }

    pub fn gallai(&mut self, v: VertexId) -> &FlowerOrBlocker {
        let inst = self.inst;
        self.gallai
            .entry(v)
            .or_insert_with(|| gallai_flower_or_blocker(&inst.graph, v, inst.k).expect("vertex present"))
    }

    /// Components around `v` when Gallai returned a blocker; `None` for a flower.
    pub fn sparse_view(&mut self, v: VertexId) -> Option<&SparseView> {
        if !self.views.contains_key(&v) {
            let blocker = match self.gallai(v) {
                FlowerOrBlocker::Flower(_) => return None,
                FlowerOrBlocker::Blocker(b) => b.clone(),
            };
            let g = &self.inst.graph;
            let mut cut = blocker.clone();
            cut.insert(v);
            let (mut trees, mut nontrees) = (Vec::new(), Vec::new());
            for c in g.components_without(&cut) {
                if !c.vertices.iter().any(|&x| g.has_edge(v, x)) {
                    continue;
                }
                if c.is_tree() {
                    trees.push(c);
                } else {
                    nontrees.push(c);
                }
            }
            self.views.insert(
                v,
                SparseView {
                    blocker,
                    trees,
                    nontrees,
                },
            );
        }
        self.views.get(&v)
    }

    /// Maximal P3 packing inside the large-dense vertices.
    pub fn packing(&self) -> &P3Packing {
        self.packing
            .get_or_init(|| maximal_p3_packing(&self.inst.graph, &self.partition().large_dense))
    }

    /// Components of `G - S`; empty when `S` does not exist.
    pub fn rest_components(&self) -> &[Component] {
        self.rest_components.get_or_init(|| match self.solution() {
            Some(s) => self.inst.graph.components_without(s),
            None => Vec::new(),
        })
    }

    /// Vertices of the tree components of `G - S`.
    pub fn tree_vertices(&self) -> BTreeSet<VertexId> {
        self.rest_components()
            .iter()
            .filter(|c| c.is_tree())
            .flat_map(|c| c.vertices.iter().copied())
            .collect()
    }

    /// Clique components of `G - S` with at least three vertices.
    pub fn big_cliques(&self) -> Vec<&Component> {
        self.rest_components()
            .iter()
            .filter(|c| c.kind == ComponentKind::Clique && c.len() >= 3)
            .collect()
    }
}
