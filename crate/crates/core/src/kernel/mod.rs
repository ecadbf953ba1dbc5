//! Polynomial-time reduction to an equivalent instance with O(k²) vertices.

mod context;
pub mod invariants;
pub mod partition;
pub mod rules;
pub mod scheduler;
pub mod trace;

pub use context::{Context, SolutionMode};
pub use invariants::{assert_phase_invariants, Phase};
pub use partition::{partition_vertices, Partition};
pub use rules::{apply_rule, find_firing};
pub use scheduler::{kernelize, kernelize_with, KernelOptions};
pub use trace::{replay, Edit, Firing, Trace};

use std::fmt;
use std::str::FromStr;

use crate::multigraph::Instance;

/// One of the nineteen reduction rules, numbered as in the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RuleId(u8);

impl RuleId {
    pub const COUNT: usize = 19;

    /// Rule `n` for `1 ≤ n ≤ 19`.
    pub fn new(n: u8) -> Option<Self> {
        (1..=Self::COUNT as u8).contains(&n).then_some(RuleId(n))
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn all() -> impl Iterator<Item = RuleId> {
        (1..=Self::COUNT as u8).map(RuleId)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}", self.0)
    }
}

impl FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.strip_prefix('R')
            .and_then(|n| n.parse::<u8>().ok())
            .and_then(RuleId::new)
            .ok_or_else(|| s.to_string())
    }
}

/// Result of one rule firing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleOutcome {
    Reduced(Instance),
    Decided(bool),
}

/// Final answer of the kernel pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelOutcome {
    Decided(bool),
    Reduced(Instance),
}

impl KernelOutcome {
    pub fn reduced(&self) -> Option<&Instance> {
        match self {
            KernelOutcome::Reduced(i) => Some(i),
            KernelOutcome::Decided(_) => None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KernelStats {
    /// Firings per rule, indexed by `RuleId::index`.
    pub fired: [usize; RuleId::COUNT],
    /// Firings that failed to decrease `(k, |V|, adjacent pairs, total multiplicity)`.
    pub measure_violations: usize,
    /// Bound violations found at phase boundaries and on the final instance.
    pub phase_violations: Vec<String>,
    /// Number of times each phase boundary was checked.
    pub phase_checks: usize,
}

impl KernelStats {
    pub fn total_fired(&self) -> usize {
        self.fired.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernelization {
    pub outcome: KernelOutcome,
    pub trace: Trace,
    pub stats: KernelStats,
}

/// Lexicographic progress measure; every firing must strictly decrease it.
pub fn measure(inst: &Instance) -> (usize, usize, usize, usize) {
    let g = &inst.graph;
    (
        inst.k,
        g.num_vertices(),
        g.adjacent_pair_count(),
        g.total_multiplicity(),
    )
}

/// `1389k² + 52k`.
pub fn size_bound(k: usize) -> usize {
    1389 * k * k + 52 * k
}
