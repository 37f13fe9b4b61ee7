//! Exhaustive ground truth for small graphs: enumerate every k-PVC in a size
//! window, connect states one legal move apart, and search.
//!
//! States are `u64` bitmasks, so graphs are limited to 64 vertices; the
//! state budget keeps real use far below that.

use std::collections::{HashMap, VecDeque};
use std::io::Write;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::graph::{check_k, CoverSet, Graph};
use crate::par;
use crate::reconfig::{ReconfSequence, Rule, Step};

pub const DEFAULT_BUDGET: usize = 2_000_000;
/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "KPVCR_STATE_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Maximum number of candidate subsets the enumeration may examine.
    pub budget: usize,
    /// Build on the rayon pool (ignored without the `parallel` feature).
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { budget: DEFAULT_BUDGET, parallel: par::AVAILABLE }
    }
}

impl OracleConfig {
    /// Default config with the budget taken from `KPVCR_STATE_BUDGET` when set.
    pub fn from_env() -> Self {
        let budget = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        OracleConfig { budget, ..Default::default() }
    }

    pub fn sequential(self) -> Self {
        OracleConfig { parallel: false, ..self }
    }
}

fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn check_window(g: &Graph, sizes: &RangeInclusive<usize>, cfg: &OracleConfig) -> Result<()> {
    let n = g.n();
    if n > 64 {
        return Err(Error::Unsupported(format!(
            "the oracle handles at most 64 vertices, got {n}"
        )));
    }
    let hi = (*sizes.end()).min(n);
    let needed: u128 = (*sizes.start()..=hi).map(|s| binomial(n, s)).sum();
    if needed > cfg.budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget: cfg.budget });
    }
    Ok(())
}

/// Bitmasks of every k-path, used for fast cover tests.
fn path_masks(g: &Graph, k: usize) -> Vec<u64> {
    let mut masks: Vec<u64> =
        g.k_paths(k).iter().map(|p| p.iter().fold(0, |m, &v| m | 1 << v)).collect();
    masks.sort_unstable();
    masks.dedup();
    masks
}

/// All subsets of `0..n` of size `s`, in colexicographic order.
fn subsets(n: usize, s: usize) -> Vec<u64> {
    if s > n {
        return Vec::new();
    }
    if s == 0 {
        return vec![0];
    }
    let limit: u128 = 1u128 << n;
    let mut out = Vec::with_capacity(binomial(n, s) as usize);
    let mut m: u64 = if s == 64 { u64::MAX } else { (1u64 << s) - 1 };
    loop {
        out.push(m);
        // Gosper's hack: next integer with the same popcount.
        let c = m & m.wrapping_neg();
        let r = m as u128 + c as u128;
        if r >= limit {
            break;
        }
        let r = r as u64;
        m = (((r ^ m) >> 2) / c) | r;
    }
    out
}

/// Covers with size in `sizes`, as bitmasks, ordered by size then colex.
pub fn enumerate_masks(
    g: &Graph,
    k: usize,
    sizes: RangeInclusive<usize>,
    cfg: &OracleConfig,
) -> Result<Vec<u64>> {
    check_k(k)?;
    check_window(g, &sizes, cfg)?;
    let paths = path_masks(g, k);
    let mut out = Vec::new();
    for s in sizes {
        if s > g.n() {
            break;
        }
        let valid = par::filter(subsets(g.n(), s), cfg.parallel, |&m| {
            paths.iter().all(|&p| p & m != 0)
        });
        out.extend(valid);
    }
    Ok(out)
}

/// All k-PVCs with `size_min <= |c| <= size_max`, by size then colex order.
pub fn enumerate_covers(
    g: &Graph,
    k: usize,
    size_min: usize,
    size_max: usize,
    cfg: &OracleConfig,
) -> Result<Vec<CoverSet>> {
    Ok(enumerate_masks(g, k, size_min..=size_max, cfg)?
        .into_iter()
        .map(CoverSet::from_mask)
        .collect())
}

/// Smallest size of a k-PVC, found by scanning sizes upward.
pub fn oracle_min_cover_size(g: &Graph, k: usize, cfg: &OracleConfig) -> Result<usize> {
    check_k(k)?;
    let paths = path_masks(g, k);
    for s in 0..=g.n() {
        check_window(g, &(s..=s), cfg)?;
        let found = par::filter(subsets(g.n(), s), cfg.parallel, |&m| {
            paths.iter().all(|&p| p & m != 0)
        });
        if !found.is_empty() {
            return Ok(s);
        }
    }
    unreachable!("the full vertex set is always a cover")
}

/// The reconfiguration graph: covers in a size window, joined when one
/// legal move under the rule turns one into the other.
#[derive(Debug, Clone)]
pub struct ReconfGraph {
    rule: Rule,
    states: Vec<u64>,
    index: HashMap<u64, u32>,
    adj: Vec<Vec<u32>>,
}

impl ReconfGraph {
    /// States are the covers whose size lies in `sizes`. Sliding and jumping
    /// keep the size, so under TS/TJ only equal-size states are adjacent; under
    /// TAR the window upper end acts as the capacity.
    pub fn build(
        g: &Graph,
        k: usize,
        rule: Rule,
        sizes: RangeInclusive<usize>,
        cfg: &OracleConfig,
    ) -> Result<ReconfGraph> {
        let states = enumerate_masks(g, k, sizes, cfg)?;
        let index: HashMap<u64, u32> =
            states.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
        let n = g.n();
        let nbr_masks: Vec<u64> =
            (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)).collect();
        let all: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let adj = par::map(&states, cfg.parallel, |&m| {
            let mut out = Vec::new();
            let mut push = |m2: u64| {
                if let Some(&j) = index.get(&m2) {
                    out.push(j);
                }
            };
            match rule {
                Rule::Tar { .. } => {
                    for v in 0..n {
                        push(m ^ 1 << v);
                    }
                }
                Rule::Ts | Rule::Tj => {
                    let mut tokens = m;
                    while tokens != 0 {
                        let v = tokens.trailing_zeros() as usize;
                        tokens &= tokens - 1;
                        let reach = if rule == Rule::Ts { nbr_masks[v] } else { all };
                        let mut free = reach & !m;
                        while free != 0 {
                            let w = free.trailing_zeros();
                            free &= free - 1;
                            push(m ^ 1 << v | 1 << w);
                        }
                    }
                }
            }
            out.sort_unstable();
            out
        });
        Ok(ReconfGraph { rule, states, index, adj })
    }

    /// Graph for one instance: covers of size `tokens` under TS/TJ, covers of
    /// size at most the capacity under TAR.
    pub fn for_rule(
        g: &Graph,
        k: usize,
        rule: Rule,
        tokens: usize,
        cfg: &OracleConfig,
    ) -> Result<ReconfGraph> {
        let sizes = match rule {
            Rule::Tar { cap } => 0..=cap.min(g.n()),
            _ => tokens..=tokens,
        };
        ReconfGraph::build(g, k, rule, sizes, cfg)
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn state(&self, i: usize) -> CoverSet {
        CoverSet::from_mask(self.states[i])
    }

    pub fn state_mask(&self, i: usize) -> u64 {
        self.states[i]
    }

    pub fn index_of(&self, c: &CoverSet) -> Option<usize> {
        c.to_mask().and_then(|m| self.index.get(&m)).map(|&i| i as usize)
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[i].iter().map(|&j| j as usize)
    }

    /// BFS distances from `src`.
    pub fn distances_from(&self, src: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.len()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src as u32]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u as usize].unwrap() + 1;
            for &w in &self.adj[u as usize] {
                if dist[w as usize].is_none() {
                    dist[w as usize] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// A shortest state path from `src` to `dst`, both ends included.
    pub fn shortest_path(&self, src: usize, dst: usize) -> Option<Vec<usize>> {
        let mut parent = vec![u32::MAX; self.len()];
        parent[src] = src as u32;
        let mut queue = VecDeque::from([src as u32]);
        while let Some(u) = queue.pop_front() {
            if u as usize == dst {
                break;
            }
            for &w in &self.adj[u as usize] {
                if parent[w as usize] == u32::MAX {
                    parent[w as usize] = u;
                    queue.push_back(w);
                }
            }
        }
        if parent[dst] == u32::MAX {
            return None;
        }
        let mut path = vec![dst];
        let mut cur = dst;
        while cur != src {
            cur = parent[cur] as usize;
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }

    /// Connected-component label per state, labels in order of first state.
    pub fn components(&self) -> Vec<u32> {
        let mut label = vec![u32::MAX; self.len()];
        let mut next = 0;
        for s in 0..self.len() {
            if label[s] != u32::MAX {
                continue;
            }
            label[s] = next;
            let mut stack = vec![s as u32];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u as usize] {
                    if label[w as usize] == u32::MAX {
                        label[w as usize] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Turn a state path into steps. TS moves are slides, TJ moves jumps.
    pub fn path_to_sequence(&self, path: &[usize]) -> ReconfSequence {
        let start = self.state(path[0]);
        let steps = path
            .windows(2)
            .map(|w| {
                let (a, b) = (self.states[w[0]], self.states[w[1]]);
                let gone = a & !b;
                let came = b & !a;
                match (gone != 0, came != 0) {
                    (true, true) => {
                        let (x, y) = (gone.trailing_zeros() as usize, came.trailing_zeros() as usize);
                        if self.rule == Rule::Ts {
                            Step::Slide(x, y)
                        } else {
                            Step::Jump(x, y)
                        }
                    }
                    (true, false) => Step::Remove(gone.trailing_zeros() as usize),
                    _ => Step::Add(came.trailing_zeros() as usize),
                }
            })
            .collect();
        ReconfSequence { start, steps }
    }

    /// Write a state table (`state <id>: <vertices>`) followed by one
    /// `<id> <id>` line per edge.
    pub fn export<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "# rule {}", self.rule)?;
        writeln!(out, "# states {}", self.len())?;
        for i in 0..self.len() {
            write!(out, "state {i}:")?;
            for v in self.state(i).iter() {
                write!(out, " {v}")?;
            }
            writeln!(out)?;
        }
        writeln!(out, "# edges {}", self.num_edges())?;
        for (i, list) in self.adj.iter().enumerate() {
            for &j in list.iter().filter(|&&j| j as usize > i) {
                writeln!(out, "{i} {j}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleAnswer {
    pub reachable: bool,
    pub shortest: Option<usize>,
}

fn endpoints_ok(g: &Graph, k: usize, rule: Rule, i: &CoverSet, j: &CoverSet) -> Result<bool> {
    g.require_cover(i, k, "I")?;
    g.require_cover(j, k, "J")?;
    Ok(match rule {
        Rule::Tar { cap } => i.len() <= cap && j.len() <= cap,
        _ => i.len() == j.len(),
    })
}

/// Build the reconfiguration graph for `(g, k, rule)` and BFS from `i` to `j`.
pub fn oracle_shortest_sequence(
    g: &Graph,
    k: usize,
    rule: Rule,
    i: &CoverSet,
    j: &CoverSet,
    cfg: &OracleConfig,
) -> Result<Option<ReconfSequence>> {
    if !endpoints_ok(g, k, rule, i, j)? {
        return Ok(None);
    }
    if i == j {
        return Ok(Some(ReconfSequence::empty(i.clone())));
    }
    let rg = ReconfGraph::for_rule(g, k, rule, i.len(), cfg)?;
    let (a, b) = (rg.index_of(i).unwrap(), rg.index_of(j).unwrap());
    Ok(rg.shortest_path(a, b).map(|p| rg.path_to_sequence(&p)))
}

pub fn oracle_reachable(
    g: &Graph,
    k: usize,
    rule: Rule,
    i: &CoverSet,
    j: &CoverSet,
    cfg: &OracleConfig,
) -> Result<OracleAnswer> {
    let seq = oracle_shortest_sequence(g, k, rule, i, j, cfg)?;
    Ok(OracleAnswer { reachable: seq.is_some(), shortest: seq.map(|s| s.len()) })
}
