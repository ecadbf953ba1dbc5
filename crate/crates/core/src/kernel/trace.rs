//! Rule firings as replayable edit lists.
//!
//! One firing per line: `<rule> <k before> <k after> <edit>...`, where an edit
//! is `del:<v>`, `mul:<u>:<v>:<m>` or `ans:yes|no`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{ParseError, ParseErrorKind};
use crate::kernel::{scheduler, RuleId, RuleOutcome, SolutionMode};
use crate::multigraph::{Instance, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Edit {
    DeleteVertex(VertexId),
    SetMultiplicity(VertexId, VertexId, u32),
    Answer(bool),
}

impl fmt::Display for Edit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Edit::DeleteVertex(v) => write!(f, "del:{v}"),
            Edit::SetMultiplicity(u, v, m) => write!(f, "mul:{u}:{v}:{m}"),
            Edit::Answer(a) => write!(f, "ans:{}", if a { "yes" } else { "no" }),
        }
    }
}

impl FromStr for Edit {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |x: &str| x.parse::<usize>().map_err(|_| ());
        match parts.as_slice() {
            ["del", v] => Ok(Edit::DeleteVertex(num(v)?)),
            ["mul", u, v, m] => Ok(Edit::SetMultiplicity(num(u)?, num(v)?, m.parse().map_err(|_| ())?)),
            ["ans", "yes"] => Ok(Edit::Answer(true)),
            ["ans", "no"] => Ok(Edit::Answer(false)),
            _ => Err(()),
        }
    }
}

/// A single rule application.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Firing {
    pub rule: RuleId,
    pub k_before: usize,
    pub k_after: usize,
    pub edits: Vec<Edit>,
}

impl Firing {
    /// Applies the edits to `inst`.
    pub fn apply(&self, inst: &Instance) -> RuleOutcome {
        let mut out = inst.clone();
        for e in &self.edits {
            match *e {
                Edit::Answer(a) => return RuleOutcome::Decided(a),
                Edit::DeleteVertex(v) => out.graph.remove_vertex(v).expect("firing deletes a present vertex"),
                Edit::SetMultiplicity(u, v, m) => out
                    .graph
                    .set_multiplicity(u, v, m)
                    .expect("firing touches present vertices"),
            }
        }
        out.k = self.k_after;
        RuleOutcome::Reduced(out)
    }
}

impl fmt::Display for Firing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.rule, self.k_before, self.k_after)?;
        for e in &self.edits {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}

pub type Trace = Vec<Firing>;

pub fn write_trace(trace: &[Firing]) -> String {
    trace.iter().map(|f| format!("{f}\n")).collect()
}

/// Parses the line format; blank lines and `c` comments are skipped.
pub fn parse_trace(text: &str) -> Result<Trace, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let err = |kind| ParseError::new(i + 1, kind);
        let mut it = line.split_whitespace();
        let rule_tok = it.next().ok_or_else(|| err(ParseErrorKind::Malformed))?;
        let rule = rule_tok
            .parse::<RuleId>()
            .map_err(|s| err(ParseErrorKind::UnknownRule(s)))?;
        let mut k = || -> Result<usize, ParseError> {
            it.next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| err(ParseErrorKind::Malformed))
        };
        let k_before = k()?;
        let k_after = k()?;
        let edits = line
            .split_whitespace()
            .skip(3)
            .map(|t| t.parse::<Edit>().map_err(|_| err(ParseErrorKind::Malformed)))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(Firing {
            rule,
            k_before,
            k_after,
            edits,
        });
    }
    Ok(out)
}

/// Why a trace failed to replay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplayError {
    pub step: usize,
    pub reason: String,
}

impl fmt::Display for ReplayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {}", self.step + 1, self.reason)
    }
}

impl std::error::Error for ReplayError {}

/// Replays `trace` on `inst`, re-deriving every firing with the scheduler's
/// rule order and checking it matches the recorded one.
pub fn replay(inst: &Instance, trace: &[Firing], mode: SolutionMode) -> Result<RuleOutcome, ReplayError> {
    let mut cur = inst.clone();
    let mut hint: Option<BTreeSet<VertexId>> = None;
    for (step, recorded) in trace.iter().enumerate() {
        let fail = |reason: String| ReplayError { step, reason };
        if recorded.k_before != cur.k {
            return Err(fail(format!("k is {} but the trace says {}", cur.k, recorded.k_before)));
        }
        let s = scheduler::step(&cur, mode, hint.as_ref());
        if let Some(sol) = s.solution {
            hint = Some(sol);
        }
        match s.firing {
            None => return Err(fail("no rule applies".into())),
            Some(f) if f != *recorded => {
                return Err(fail(format!("expected '{f}', trace has '{recorded}'")));
            }
            Some(f) => match f.apply(&cur) {
                RuleOutcome::Decided(a) => {
                    if step + 1 != trace.len() {
                        return Err(fail("trace continues after a decision".into()));
                    }
                    return Ok(RuleOutcome::Decided(a));
                }
                RuleOutcome::Reduced(next) => cur = next,
            },
        }
    }
    Ok(RuleOutcome::Reduced(cur))
}
