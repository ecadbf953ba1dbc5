//! Guess the `S`-vertices a cycle visits and the component each fragment
//! crosses, then solve one LDTP instance per component.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use crate::error::{CycleError, GraphError};
use crate::longest_cycle::labels::label_components;
use crate::longest_cycle::ldtp::{solve_clique, solve_tree, Host, LocalPair};
use crate::multigraph::{ComponentKind, MultiGraph, VertexId};
use crate::par::{self, Parallelism};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleOptions {
    /// Let a fragment cross only components labeled with its terminal pair.
    /// With `false` every component with a finite `q` is tried.
    pub restrict_to_labels: bool,
    pub parallelism: Parallelism,
}

impl Default for CycleOptions {
    fn default() -> Self {
        CycleOptions {
            restrict_to_labels: true,
            parallelism: Parallelism::default(),
        }
    }
}

/// Length of a longest cycle of the simple graph `g`, given `s` such that every
/// component of `g - s` is a clique or a tree. `None` when `g` is a forest.
pub fn longest_cycle(g: &MultiGraph, s: &BTreeSet<VertexId>) -> Result<Option<usize>, CycleError> {
    longest_cycle_with(g, s, &CycleOptions::default())
}

struct Prepared {
    kinds: Vec<ComponentKind>,
    hosts: Vec<Host>,
    /// `attach[c][u]`: neighbors of `u ∈ S` in component `c`, as a local mask.
    attach: Vec<BTreeMap<VertexId, Vec<bool>>>,
    candidates: BTreeMap<(VertexId, VertexId), Vec<usize>>,
}

/// One guess: a canonical sequence of `S`-vertices and, per fragment, a
/// component id or `None` for a direct edge.
type Guess = (Vec<VertexId>, Vec<Option<usize>>);

pub fn longest_cycle_with(
    g: &MultiGraph,
    s: &BTreeSet<VertexId>,
    opts: &CycleOptions,
) -> Result<Option<usize>, CycleError> {
    if let Some((u, v)) = g.multi_edges().next() {
        return Err(CycleError::NotSimple(u, v));
    }
    if let Some(&v) = s.iter().find(|&&v| !g.contains(v)) {
        return Err(GraphError::UnknownVertex(v).into());
    }
    let table = label_components(g, s)?;
    let disjoint = table
        .components
        .iter()
        .filter(|c| c.kind == ComponentKind::Clique && c.len() >= 3)
        .map(|c| c.len())
        .max();

    let hosts: Vec<Host> = table.components.iter().map(|c| Host::new(g, c)).collect();
    let attach = hosts
        .iter()
        .map(|h| {
            s.iter()
                .map(|&u| {
                    let nbrs = g.neighbors(u).map(|(w, _)| w).filter(|w| h.index.contains_key(w));
                    (u, h.mask(nbrs).expect("filtered to the host"))
                })
                .collect()
        })
        .collect();
    let prep = Prepared {
        kinds: table.components.iter().map(|c| c.kind).collect(),
        hosts,
        attach,
        candidates: if opts.restrict_to_labels {
            table.labels
        } else {
            table.ranked
        },
    };

    let guesses = enumerate_guesses(g, s, &prep);
    let through_s = par::max_by_key(opts.parallelism, &guesses, |guess| {
        evaluate(&prep, guess).map(|x| x as i64)
    });
    Ok(disjoint.max(through_s.map(|x| x as usize)))
}

/// Sequences start at their smallest vertex, and for three or more vertices
/// the second is below the last, so each cyclic order is listed once.
fn canonical_sequences(s: &BTreeSet<VertexId>) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    for l in 1..=s.len() {
        for seq in s.iter().copied().permutations(l) {
            let first_is_min = seq.iter().all(|&x| x >= seq[0]);
            if first_is_min && (l < 3 || seq[1] < seq[l - 1]) {
                out.push(seq);
            }
        }
    }
    out
}

fn enumerate_guesses(g: &MultiGraph, s: &BTreeSet<VertexId>, prep: &Prepared) -> Vec<Guess> {
    let mut out = Vec::new();
    for seq in canonical_sequences(s) {
        let l = seq.len();
        let choices: Vec<Vec<Option<usize>>> = (0..l)
            .map(|i| {
                let (a, b) = (seq[i], seq[(i + 1) % l]);
                let mut opts: Vec<Option<usize>> = Vec::new();
                if a != b && g.has_edge(a, b) {
                    opts.push(None);
                }
                opts.extend(prep.candidates[&(a, b)].iter().map(|&c| Some(c)));
                opts
            })
            .collect();
        for assignment in choices.into_iter().multi_cartesian_product() {
            // two S-vertices and the single edge between them are not a cycle
            if l == 2 && assignment.iter().all(Option::is_none) {
                continue;
            }
            out.push((seq.clone(), assignment));
        }
    }
    out
}

fn evaluate(prep: &Prepared, (seq, assignment): &Guess) -> Option<usize> {
    let l = seq.len();
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, c) in assignment.iter().enumerate() {
        if let Some(c) = c {
            groups.entry(*c).or_default().push(i);
        }
    }
    let mut total = l + groups.values().map(Vec::len).sum::<usize>();
    for (&c, idx) in &groups {
        let pairs: Vec<LocalPair> = idx
            .iter()
            .map(|&i| {
                let (a, b) = (seq[i], seq[(i + 1) % l]);
                (prep.attach[c][&a].clone(), prep.attach[c][&b].clone())
            })
            .collect();
        let min_edges = vec![l == 1; pairs.len()];
        let host = &prep.hosts[c];
        let best = match prep.kinds[c] {
            ComponentKind::Clique => solve_clique(host.len(), &pairs, &min_edges),
            ComponentKind::Tree => solve_tree(&host.adj, &pairs, &min_edges),
            ComponentKind::Other => unreachable!("modulator was checked"),
        }?;
        total += best;
    }
    Some(total)
}
