//! Runs the rules to a global fixpoint, lowest-numbered applicable rule first.

use std::collections::BTreeSet;

use crate::kernel::invariants::{assert_phase_invariants, Phase};
use crate::kernel::{
    find_firing, measure, Context, Firing, KernelOutcome, KernelStats, Kernelization, RuleId, RuleOutcome, SolutionMode,
};
use crate::multigraph::{Instance, VertexId};
use crate::solvers::{exact_ctov, find_obstruction};

/// Largest residual instance that `decide_residual` solves outright.
pub const RESIDUAL_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KernelOptions {
    pub mode: SolutionMode,
    /// Solve a reduced instance with at most [`RESIDUAL_LIMIT`] vertices exactly.
    pub decide_residual: bool,
    /// Check the size bounds whenever a group of rules is exhausted.
    pub check_phases: bool,
}

impl Default for KernelOptions {
    fn default() -> Self {
        KernelOptions {
            mode: SolutionMode::Exact,
            decide_residual: false,
            check_phases: true,
        }
    }
}

pub(crate) struct Step {
    pub firing: Option<Firing>,
    /// The `S` computed while evaluating triggers, if any rule needed it.
    pub solution: Option<BTreeSet<VertexId>>,
    /// Phase boundaries passed without a firing.
    pub passed: Vec<Phase>,
}

/// Evaluates the rules in order on `inst` and returns the first firing.
pub(crate) fn step(inst: &Instance, mode: SolutionMode, hint: Option<&BTreeSet<VertexId>>) -> Step {
    let mut ctx = Context::new(inst, mode, hint);
    let mut passed = Vec::new();
    let mut firing = None;
    for rule in RuleId::all() {
        match rule.number() {
            5 => passed.push(Phase::LargeSparse),
            14 => passed.push(Phase::LargeDense),
            _ => {}
        }
        if let Some(f) = find_firing(&mut ctx, rule) {
            firing = Some(f);
            break;
        }
    }
    Step {
        firing,
        solution: ctx.solution_if_computed().cloned(),
        passed,
    }
}

pub fn kernelize(inst: &Instance) -> Kernelization {
    kernelize_with(inst, &KernelOptions::default())
}

pub fn kernelize_with(inst: &Instance, opts: &KernelOptions) -> Kernelization {
    let mut cur = inst.clone();
    let mut trace = Vec::new();
    let mut stats = KernelStats::default();
    let mut hint: Option<BTreeSet<VertexId>> = None;
    let outcome = loop {
        if cur.k == 0 {
            break KernelOutcome::Decided(find_obstruction(&cur.graph).is_none());
        }
        if cur.graph.is_empty() {
            break KernelOutcome::Decided(true);
        }
        let s = step(&cur, opts.mode, hint.as_ref());
        if let Some(sol) = s.solution {
            hint = Some(sol);
        }
        if opts.check_phases {
            for phase in s.passed {
                stats.phase_checks += 1;
                stats.phase_violations.extend(
                    assert_phase_invariants(&cur, phase, None)
                        .into_iter()
                        .map(|m| format!("{phase:?}: {m}")),
                );
            }
        }
        let Some(firing) = s.firing else {
            break KernelOutcome::Reduced(cur);
        };
        stats.fired[firing.rule.index()] += 1;
        let result = firing.apply(&cur);
        trace.push(firing);
        match result {
            RuleOutcome::Decided(a) => break KernelOutcome::Decided(a),
            RuleOutcome::Reduced(next) => {
                if measure(&next) >= measure(&cur) {
                    stats.measure_violations += 1;
                    debug_assert!(false, "measure did not decrease at {}", trace.last().expect("pushed"));
                }
                cur = next;
            }
        }
    };
    let outcome = match outcome {
        KernelOutcome::Reduced(red) => {
            if opts.check_phases {
                stats.phase_checks += 1;
                let alive = hint
                    .as_ref()
                    .map(|h| h.iter().copied().filter(|&v| red.graph.contains(v)).collect());
                stats.phase_violations.extend(
                    assert_phase_invariants(&red, Phase::Final, alive.as_ref())
                        .into_iter()
                        .map(|m| format!("Final: {m}")),
                );
            }
            if opts.decide_residual && red.graph.num_vertices() <= RESIDUAL_LIMIT {
                KernelOutcome::Decided(exact_ctov(&red.graph, red.k).is_some())
            } else {
                KernelOutcome::Reduced(red)
            }
        }
        decided => decided,
    };
    Kernelization { outcome, trace, stats }
}
