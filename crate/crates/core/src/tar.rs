//! TAR decision shared by the path, tree and cycle solvers.
//!
//! Both endpoints are brought to a common level `L` (by adding tokens, or by
//! one removal when the cap leaves no room), joined by a TJ sequence at that
//! level, and the TJ core is expanded into add/remove pairs that peak at
//! `L + 1 <= u`.

use crate::error::Result;
use crate::graph::CoverSet;
use crate::reconfig::{expand_to_tar, NoReason, ReconfSequence, SolveOutcome, Step};

/// Add the smallest absent vertices until `c` has `size` tokens.
pub(crate) fn raise(c: &CoverSet, n: usize, size: usize) -> (CoverSet, Vec<Step>) {
    let mut out = c.clone();
    let mut steps = Vec::new();
    for v in 0..n {
        if out.len() >= size {
            break;
        }
        if out.insert(v) {
            steps.push(Step::Add(v));
        }
    }
    (out, steps)
}

/// Join `prefix_i` (from I), the expanded TJ `core`, and the reverse of
/// `prefix_j` (from J).
pub(crate) fn assemble(
    i: &CoverSet,
    prefix_i: Vec<Step>,
    core: &ReconfSequence,
    j: &CoverSet,
    prefix_j: Vec<Step>,
) -> Result<ReconfSequence> {
    let head = ReconfSequence::new(i.clone(), prefix_i);
    let tail = ReconfSequence::new(j.clone(), prefix_j).reverse();
    head.concat(&expand_to_tar(core))?.concat(&tail)
}

/// Cases that do not depend on the graph: equal endpoints and the capacity
/// bounds. `None` means the caller must continue.
pub(crate) fn capacity_screen(
    i: &CoverSet,
    j: &CoverSet,
    u: usize,
    psi: usize,
) -> Option<SolveOutcome> {
    if i == j {
        return Some(if u >= i.len() {
            SolveOutcome::Yes(ReconfSequence::empty(i.clone()))
        } else {
            SolveOutcome::No(NoReason::CapacityBlocked)
        });
    }
    let s = i.len().max(j.len());
    if u < s || u == psi {
        return Some(SolveOutcome::No(NoReason::CapacityBlocked));
    }
    None
}

/// Generic TAR decision for graph classes where any two covers of equal
/// size are TJ-reconfigurable (paths and trees).
///
/// `removable` returns a token whose removal keeps a cover; `tj_core` joins
/// two covers of equal size.
pub(crate) fn solve_by_levels(
    n: usize,
    i: &CoverSet,
    j: &CoverSet,
    u: usize,
    psi: usize,
    removable: impl Fn(&CoverSet) -> Option<usize>,
    tj_core: impl Fn(&CoverSet, &CoverSet) -> Result<ReconfSequence>,
) -> Result<SolveOutcome> {
    if let Some(out) = capacity_screen(i, j, u, psi) {
        return Ok(out);
    }
    let s = i.len().max(j.len());
    let level = if u > s { s } else { s - 1 };
    let reach = |c: &CoverSet| -> Option<(CoverSet, Vec<Step>)> {
        if c.len() > level {
            let t = removable(c)?;
            Some((c.without(t), vec![Step::Remove(t)]))
        } else {
            Some(raise(c, n, level))
        }
    };
    let (Some((ci, pi)), Some((cj, pj))) = (reach(i), reach(j)) else {
        return Ok(SolveOutcome::No(NoReason::NoRemovableToken));
    };
    let core = tj_core(&ci, &cj)?;
    Ok(SolveOutcome::Yes(assemble(i, pi, &core, j, pj)?))
}
