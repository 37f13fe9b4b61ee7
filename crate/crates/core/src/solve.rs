//! Dispatch an instance to the solver for its graph shape and rule.

use crate::cycle::{solve_cycle, solve_cycle_tar};
use crate::error::{Error, Result};
use crate::graph::GraphShape;
use crate::instance::Instance;
use crate::oracle::{oracle_shortest_sequence, OracleConfig};
use crate::path::{solve_path_tar, solve_path_tj, solve_path_ts};
use crate::reconfig::{NoReason, Rule, SolveOutcome};
use crate::tree::{solve_tree_tar, solve_tree_tj};

/// Polynomial solver for the instance. Trees under TS and graphs that are
/// not paths, cycles or trees give `Error::Unsupported`.
pub fn solve(inst: &Instance) -> Result<SolveOutcome> {
    let Instance { k, graph: g, i, j, rule } = inst;
    let k = *k;
    match (g.classify(), *rule) {
        (GraphShape::Path { .. }, Rule::Ts) => solve_path_ts(g, k, i, j),
        (GraphShape::Path { .. }, Rule::Tj) => solve_path_tj(g, k, i, j),
        (GraphShape::Path { .. }, Rule::Tar { cap }) => solve_path_tar(g, k, i, j, cap),
        (GraphShape::Cycle { .. }, Rule::Tar { cap }) => solve_cycle_tar(g, k, i, j, cap),
        (GraphShape::Cycle { .. }, rule) => solve_cycle(g, k, i, j, rule),
        (GraphShape::Tree, Rule::Tj) => solve_tree_tj(g, k, i, j),
        (GraphShape::Tree, Rule::Tar { cap }) => solve_tree_tar(g, k, i, j, cap),
        (GraphShape::Tree, Rule::Ts) => Err(Error::Unsupported("open problem".into())),
        (GraphShape::General, _) => Err(Error::Unsupported("open problem".into())),
    }
}

/// Exhaustive answer with a shortest sequence, for any shape.
pub fn solve_by_oracle(inst: &Instance, cfg: &OracleConfig) -> Result<SolveOutcome> {
    let Instance { k, graph, i, j, rule } = inst;
    if let Some(seq) = oracle_shortest_sequence(graph, *k, *rule, i, j, cfg)? {
        return Ok(SolveOutcome::Yes(seq));
    }
    Ok(SolveOutcome::No(match rule {
        Rule::Ts | Rule::Tj if i.len() != j.len() => NoReason::SizeMismatch,
        Rule::Tar { cap } if i.len().max(j.len()) > *cap => NoReason::CapacityBlocked,
        _ => NoReason::Unreachable,
    }))
}
