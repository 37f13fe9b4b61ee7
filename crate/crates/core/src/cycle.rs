//! Cycles: movable tokens, rotation, cutting at a shared token, and the TS,
//! TJ and TAR solvers.
//!
//! Work happens on positions `0..n` in clockwise order starting at vertex 0;
//! counterclockwise moves are handled by mirroring positions.

use crate::error::{Error, Result};
use crate::graph::{check_k, CoverSet, Graph, GraphShape};
use crate::instance::Instance;
use crate::path;
use crate::reconfig::{NoReason, ReconfSequence, Rule, SolveOutcome, Step};
use crate::tar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Clockwise,
    CounterClockwise,
}

struct CycleFrame {
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl CycleFrame {
    fn new(g: &Graph) -> Result<CycleFrame> {
        let GraphShape::Cycle { order } = g.classify() else {
            return Err(Error::WrongShape { expected: "cycle" });
        };
        let mut pos = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        Ok(CycleFrame { order, pos })
    }

    fn n(&self) -> usize {
        self.order.len()
    }

    fn positions(&self, c: &CoverSet) -> Vec<usize> {
        let mut p: Vec<usize> = c.iter().map(|v| self.pos[v]).collect();
        p.sort_unstable();
        p
    }

    fn vertex(&self, p: usize) -> usize {
        self.order[p]
    }

    /// Cover check by token gaps, falling back to the graph search for the
    /// error and its witness.
    fn require_cover(&self, g: &Graph, c: &CoverSet, k: usize, which: &str) -> Result<()> {
        let n = self.n();
        if c.max().is_none_or(|m| m < n) {
            let p = self.positions(c);
            let ok = if p.is_empty() { n < k } else { gaps(n, &p).iter().all(|&x| x < k) };
            if ok {
                return Ok(());
            }
        }
        g.require_cover(c, k, which)
    }
}

/// Minimum k-PVC size of `C_n`: 0 when `n < k`, else `ceil(n / k)`.
fn psi(n: usize, k: usize) -> usize {
    if n < k {
        0
    } else {
        n.div_ceil(k)
    }
}

/// Covers of this size on `C_n` admit no move at all: `k | n`, at least two
/// tokens, and every token followed by exactly `k - 1` free vertices. With
/// `n = k` the single token can always slide.
fn frozen_size(n: usize, k: usize, s: usize) -> bool {
    n.is_multiple_of(k) && n / k >= 2 && s == n / k
}

/// Free vertices clockwise after each token.
fn gaps(n: usize, p: &[usize]) -> Vec<usize> {
    let s = p.len();
    (0..s).map(|j| (p[(j + 1) % s] + n - p[j] - 1) % n).collect()
}

/// Gap after token `j` alone, without building the whole gap vector.
fn gap_at(n: usize, p: &[usize], j: usize) -> usize {
    (p[(j + 1) % p.len()] + n - p[j] - 1) % n
}

/// Whether token `j` can slide one step in direction `d`.
fn movable(n: usize, k: usize, p: &[usize], j: usize, d: Direction) -> bool {
    let s = p.len();
    if s == 0 || s == n {
        return false;
    }
    if s == 1 {
        return true;
    }
    let (ahead, behind) = (gap_at(n, p, j), gap_at(n, p, (j + s - 1) % s));
    match d {
        Direction::Clockwise => ahead >= 1 && behind + 1 < k,
        Direction::CounterClockwise => behind >= 1 && ahead + 1 < k,
    }
}

fn find_movable_pos(n: usize, k: usize, p: &[usize]) -> Option<(usize, Direction)> {
    (0..p.len()).find_map(|j| {
        [Direction::Clockwise, Direction::CounterClockwise]
            .into_iter()
            .find(|&d| movable(n, k, p, j, d))
            .map(|d| (j, d))
    })
}

/// A token whose one-step slide keeps the cover valid, as a vertex id and a
/// direction. `None` exactly for frozen covers (and the full vertex set).
pub fn find_movable_token(g: &Graph, k: usize, cover: &CoverSet) -> Result<Option<(usize, Direction)>> {
    check_k(k)?;
    let frame = CycleFrame::new(g)?;
    frame.require_cover(g, cover, k, "cover")?;
    let p = frame.positions(cover);
    Ok(find_movable_pos(frame.n(), k, &p).map(|(j, d)| (frame.vertex(p[j]), d)))
}

/// Clockwise rotation moves for sorted positions `p` starting with token
/// index `j`, which must be movable clockwise.
///
/// After the start token moves, the others follow in cyclic order, except
/// that a run of adjacent tokens moves front to back so that no slide targets
/// an occupied vertex.
fn rotate_cw(n: usize, p: &[usize], j: usize) -> Vec<(usize, usize)> {
    let s = p.len();
    let step = |x: usize| (x, (x + 1) % n);
    // Token index of the `d`-th follower after `j`.
    let rest = |d: usize| (j + 1 + d) % s;
    let mut moves = Vec::with_capacity(s);
    moves.push(step(p[j]));
    let mut a = 0;
    while a + 1 < s {
        let mut b = a;
        while b + 2 < s && gap_at(n, p, rest(b)) == 0 {
            b += 1;
        }
        for t in (a..=b).rev() {
            moves.push(step(p[rest(t)]));
        }
        a = b + 1;
    }
    moves
}

fn mirror(n: usize, x: usize) -> usize {
    (n - x) % n
}

/// Rotation moves in either direction, on positions.
fn rotate_pos(n: usize, p: &[usize], start: usize, d: Direction) -> Vec<(usize, usize)> {
    match d {
        Direction::Clockwise => {
            let j = p.binary_search(&start).unwrap();
            rotate_cw(n, p, j)
        }
        Direction::CounterClockwise => {
            let mut m: Vec<usize> = p.iter().map(|&x| mirror(n, x)).collect();
            m.sort_unstable();
            let j = m.binary_search(&mirror(n, start)).unwrap();
            rotate_cw(n, &m, j)
                .into_iter()
                .map(|(a, b)| (mirror(n, a), mirror(n, b)))
                .collect()
        }
    }
}

/// Slide every token one step in direction `d`, beginning with `start`.
pub fn rotate(
    g: &Graph,
    k: usize,
    cover: &CoverSet,
    start: usize,
    d: Direction,
) -> Result<ReconfSequence> {
    check_k(k)?;
    let frame = CycleFrame::new(g)?;
    frame.require_cover(g, cover, k, "cover")?;
    let n = frame.n();
    let p = frame.positions(cover);
    let sp = *frame.pos.get(start).ok_or(Error::VertexOutOfRange { vertex: start, n })?;
    let Ok(j) = p.binary_search(&sp) else {
        return Err(Error::Precondition(format!("no token on vertex {start}")));
    };
    if !movable(n, k, &p, j, d) {
        return Err(Error::Precondition(format!("token on vertex {start} cannot move {d:?}")));
    }
    let steps = rotate_pos(n, &p, sp, d)
        .into_iter()
        .map(|(a, b)| Step::Slide(frame.vertex(a), frame.vertex(b)))
        .collect();
    Ok(ReconfSequence::new(cover.clone(), steps))
}

/// The path `C - v` with both covers restricted to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutInstance {
    pub path: Graph,
    /// Cycle vertex for each path vertex.
    pub to_cycle: Vec<usize>,
    pub v: usize,
    pub i: CoverSet,
    pub j: CoverSet,
}

impl CutInstance {
    /// Map a sequence on the path back to the cycle, keeping the token on `v`.
    pub fn lift(&self, seq: &ReconfSequence) -> ReconfSequence {
        let mut out = seq.map(|x| self.to_cycle[x]);
        out.start.insert(self.v);
        out
    }
}

/// Cut the cycle at a vertex holding a token in both covers.
pub fn cut_cycle(g: &Graph, k: usize, i: &CoverSet, j: &CoverSet, v: usize) -> Result<CutInstance> {
    check_k(k)?;
    let frame = CycleFrame::new(g)?;
    frame.require_cover(g, i, k, "I")?;
    frame.require_cover(g, j, k, "J")?;
    if !(i.contains(v) && j.contains(v)) {
        return Err(Error::Precondition(format!("vertex {v} is not in both covers")));
    }
    let n = frame.n();
    let pv = frame.pos[v];
    let to_cycle: Vec<usize> = (1..n).map(|d| frame.vertex((pv + d) % n)).collect();
    let mut to_path = vec![usize::MAX; n];
    for (q, &x) in to_cycle.iter().enumerate() {
        to_path[x] = q;
    }
    let restrict = |c: &CoverSet| c.iter().filter(|&x| x != v).map(|x| to_path[x]).collect();
    Ok(CutInstance {
        path: Graph::path(n - 1)?,
        to_cycle,
        v,
        i: restrict(i),
        j: restrict(j),
    })
}

/// Core of the TS/TJ solver on validated covers of equal size: rotate `I`
/// until it meets `J`, cut at the smallest shared vertex, solve on the path.
/// `None` when `I` is frozen.
fn solve_pos(frame: &CycleFrame, k: usize, i: &CoverSet, j: &CoverSet, slide: bool) -> Result<Option<ReconfSequence>> {
    if i == j {
        return Ok(Some(ReconfSequence::empty(i.clone())));
    }
    let n = frame.n();
    let mut cur = frame.positions(i);
    let target = frame.positions(j);
    let mut in_j = vec![false; n];
    for &x in &target {
        in_j[x] = true;
    }
    let mut moves: Vec<(usize, usize)> = Vec::new();
    if !cur.iter().any(|&x| in_j[x]) {
        let Some((idx, d)) = find_movable_pos(n, k, &cur) else {
            debug_assert!(frozen_size(n, k, cur.len()), "n={n} k={k} {cur:?} {target:?}");
            return Ok(None);
        };
        let mut start = cur[idx];
        for _ in 0..n {
            if cur.iter().any(|&x| in_j[x]) {
                break;
            }
            let at = cur.binary_search(&start).unwrap();
            if !movable(n, k, &cur, at, d) {
                let (idx, d2) = find_movable_pos(n, k, &cur).expect("rotation keeps a movable token");
                debug_assert_eq!(d2, d);
                start = cur[idx];
            }
            moves.extend(rotate_pos(n, &cur, start, d));
            let shift = |x: usize| match d {
                Direction::Clockwise => (x + 1) % n,
                Direction::CounterClockwise => (x + n - 1) % n,
            };
            // Shifting every position keeps the order except for the one
            // token that wraps around.
            for x in cur.iter_mut() {
                *x = shift(*x);
            }
            match d {
                Direction::Clockwise if cur.last() == Some(&0) => cur.rotate_right(1),
                Direction::CounterClockwise if cur.first() == Some(&(n - 1)) => cur.rotate_left(1),
                _ => {}
            }
            debug_assert!(cur.windows(2).all(|w| w[0] < w[1]));
            start = shift(start);
        }
    }
    let v = cur
        .iter()
        .filter(|&&x| in_j[x])
        .map(|&x| frame.vertex(x))
        .min()
        .expect("rotation reaches a shared vertex within n rounds");
    let pv = frame.pos[v];
    let to_path = |x: usize| (x + n - pv - 1) % n;
    // Positions after `pv` come first on the path, then those before it.
    let restrict = |c: &[usize]| {
        let split = c.partition_point(|&x| x <= pv);
        c[split..].iter().chain(&c[..split]).filter(|&&x| x != pv).map(|&x| to_path(x)).collect::<Vec<_>>()
    };
    let (pi, pj) = (restrict(&cur), restrict(&target));
    let path_moves = if slide {
        path::ts_moves(n - 1, &pi, &pj)?
    } else {
        path::tj_moves(&pi, &pj)
    };
    let from_path = |q: usize| (q + pv + 1) % n;
    let mut steps = Vec::with_capacity(moves.len() + path_moves.len());
    steps.extend(moves.into_iter().map(|(a, b)| Step::Slide(frame.vertex(a), frame.vertex(b))));
    steps.extend(path_moves.into_iter().map(|(a, b)| {
        let (x, y) = (frame.vertex(from_path(a)), frame.vertex(from_path(b)));
        if slide {
            Step::Slide(x, y)
        } else {
            Step::Jump(x, y)
        }
    }));
    Ok(Some(ReconfSequence::new(i.clone(), steps)))
}

/// TS or TJ on a cycle. Equal-size covers are reconfigurable unless they
/// are distinct frozen minimum covers.
pub fn solve_cycle(g: &Graph, k: usize, i: &CoverSet, j: &CoverSet, rule: Rule) -> Result<SolveOutcome> {
    let slide = match rule {
        Rule::Ts => true,
        Rule::Tj => false,
        Rule::Tar { .. } => return Err(Error::Unsupported("use solve_cycle_tar for TAR".into())),
    };
    check_k(k)?;
    let frame = CycleFrame::new(g)?;
    frame.require_cover(g, i, k, "I")?;
    frame.require_cover(g, j, k, "J")?;
    if i.len() != j.len() {
        return Ok(SolveOutcome::No(NoReason::SizeMismatch));
    }
    if i == j {
        return Ok(SolveOutcome::Yes(ReconfSequence::empty(i.clone())));
    }
    Ok(match solve_pos(&frame, k, i, j, slide)? {
        Some(seq) => SolveOutcome::Yes(seq),
        None => SolveOutcome::No(NoReason::FrozenMinimumCycle),
    })
}

/// Smallest-id token whose removal keeps a cover: the gaps on both sides of
/// it plus its own vertex must stay below `k`.
fn removable_token(frame: &CycleFrame, k: usize, c: &CoverSet) -> Option<usize> {
    let n = frame.n();
    let p = frame.positions(c);
    let s = p.len();
    match s {
        0 => None,
        1 => (n < k).then(|| frame.vertex(p[0])),
        _ => {
            let g = gaps(n, &p);
            (0..s)
                .filter(|&j| g[(j + s - 1) % s] + g[j] + 1 < k)
                .map(|j| frame.vertex(p[j]))
                .min()
        }
    }
}

/// TAR(u) on a cycle.
///
/// With room for two extra tokens a frozen pair is unlocked by adding the
/// same fresh vertex to both sides. With room for one, the TJ answer at the
/// common size decides. With no room (`u` equal to the larger size) both
/// sides drop a token first; if that lands on frozen minimum covers they must
/// share one.
pub fn solve_cycle_tar(g: &Graph, k: usize, i: &CoverSet, j: &CoverSet, u: usize) -> Result<SolveOutcome> {
    check_k(k)?;
    let frame = CycleFrame::new(g)?;
    frame.require_cover(g, i, k, "I")?;
    frame.require_cover(g, j, k, "J")?;
    let n = frame.n();
    if let Some(out) = tar::capacity_screen(i, j, u, psi(n, k)) {
        return Ok(out);
    }
    let s = i.len().max(j.len());
    if u > s {
        let (ci, pi) = tar::raise(i, n, s);
        let (cj, pj) = tar::raise(j, n, s);
        if let Some(core) = solve_pos(&frame, k, &ci, &cj, false)? {
            return Ok(SolveOutcome::Yes(tar::assemble(i, pi, &core, j, pj)?));
        }
        if u == s + 1 {
            return Ok(SolveOutcome::No(NoReason::FrozenMinimumCycle));
        }
        let (ci2, cj2, pi, pj) = match (0..n).find(|&v| !ci.contains(v) && !cj.contains(v)) {
            Some(v) => {
                let (mut pi, mut pj) = (pi, pj);
                pi.push(Step::Add(v));
                pj.push(Step::Add(v));
                (ci.with(v), cj.with(v), pi, pj)
            }
            // I and J together use every vertex: raise each on its own.
            None => {
                let (a, x) = tar::raise(&ci, n, s + 1);
                let (b, y) = tar::raise(&cj, n, s + 1);
                (a, b, [pi, x].concat(), [pj, y].concat())
            }
        };
        let core = solve_pos(&frame, k, &ci2, &cj2, false)?.expect("covers above the minimum are never frozen");
        return Ok(SolveOutcome::Yes(tar::assemble(i, pi, &core, j, pj)?));
    }
    // u == s > psi: the first move from a full endpoint must be a removal.
    let level = s - 1;
    let lower = |c: &CoverSet| -> Vec<(CoverSet, Vec<Step>)> {
        if c.len() <= level {
            return vec![tar::raise(c, n, level)];
        }
        if frozen_size(n, k, level) {
            // Every removable token is a candidate; one must match the other side.
            c.iter()
                .filter(|&t| g.is_kpvc(&c.without(t), k))
                .map(|t| (c.without(t), vec![Step::Remove(t)]))
                .collect()
        } else {
            removable_token(&frame, k, c)
                .map(|t| vec![(c.without(t), vec![Step::Remove(t)])])
                .unwrap_or_default()
        }
    };
    let (li, lj) = (lower(i), lower(j));
    if li.is_empty() || lj.is_empty() {
        return Ok(SolveOutcome::No(NoReason::NoRemovableToken));
    }
    if frozen_size(n, k, level) {
        let common = li.iter().find_map(|(a, pa)| lj.iter().find(|(b, _)| a == b).map(|(_, pb)| (a, pa, pb)));
        return Ok(match common {
            Some((m, pa, pb)) => {
                let core = ReconfSequence::empty(m.clone());
                SolveOutcome::Yes(tar::assemble(i, pa.clone(), &core, j, pb.clone())?)
            }
            None => SolveOutcome::No(NoReason::FrozenMinimumCycle),
        });
    }
    let ((ci, pi), (cj, pj)) = (li.into_iter().next().unwrap(), lj.into_iter().next().unwrap());
    let core = solve_pos(&frame, k, &ci, &cj, false)?.expect("level below the cap is not frozen");
    Ok(SolveOutcome::Yes(tar::assemble(i, pi, &core, j, pj)?))
}

/// The cycle on `3k - 1` vertices with `I = {0, k, 2k}` and
/// `J = {3k-2, 2k-2, k-2}` under TJ. It is reachable, but every sequence is
/// longer than `|I Δ J| / 2 = 3`.
pub fn lemma11_family(k: usize) -> Result<Instance> {
    if k < 3 {
        return Err(Error::InvalidK(k));
    }
    let graph = Graph::cycle(3 * k - 1)?;
    Ok(Instance {
        k,
        graph,
        i: CoverSet::new([0, k, 2 * k]),
        j: CoverSet::new([3 * k - 2, 2 * k - 2, k - 2]),
        rule: Rule::Tj,
    })
}

/// The explicit five-jump sequence for [`lemma11_family`].
pub fn lemma11_witness(k: usize) -> Result<ReconfSequence> {
    let inst = lemma11_family(k)?;
    Ok(ReconfSequence::new(
        inst.i,
        vec![
            Step::Jump(2 * k, 2 * k - 1),
            Step::Jump(k, k - 1),
            Step::Jump(0, 3 * k - 2),
            Step::Jump(2 * k - 1, 2 * k - 2),
            Step::Jump(k - 1, k - 2),
        ],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reconfig::verify;

    fn set(v: &[usize]) -> CoverSet {
        CoverSet::new(v.iter().copied())
    }

    #[test]
    fn movable_tokens() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(find_movable_token(&c6, 3, &set(&[0, 3])).unwrap(), None);
        let c7 = Graph::cycle(7).unwrap();
        let cover = set(&[0, 2, 4]);
        let (t, d) = find_movable_token(&c7, 3, &cover).unwrap().unwrap();
        let to = match d {
            Direction::Clockwise => (t + 1) % 7,
            Direction::CounterClockwise => (t + 6) % 7,
        };
        assert!(c7.is_kpvc(&cover.without(t).with(to), 3));
        let (t, _) = find_movable_token(&c6, 3, &set(&[0, 1, 3])).unwrap().unwrap();
        assert!([0, 1, 3].contains(&t));
    }

    #[test]
    fn rotation() {
        let c7 = Graph::cycle(7).unwrap();
        let cover = set(&[0, 2, 4]);
        let (t, _) = find_movable_token(&c7, 3, &cover).unwrap().unwrap();
        let seq = rotate(&c7, 3, &cover, 4, Direction::Clockwise).unwrap();
        assert_eq!(seq.len(), 3);
        assert_eq!(seq.end(), set(&[1, 3, 5]));
        verify(&c7, 3, Rule::Ts, &seq, &set(&[1, 3, 5])).unwrap();
        assert!(cover.contains(t));

        let mut cur = cover.clone();
        for d in [Direction::Clockwise, Direction::Clockwise, Direction::CounterClockwise, Direction::CounterClockwise] {
            let p = CycleFrame::new(&c7).unwrap().positions(&cur);
            let (j, _) = (0..p.len())
                .map(|j| (j, movable(7, 3, &p, j, d)))
                .find(|x| x.1)
                .unwrap();
            let seq = rotate(&c7, 3, &cur, p[j], d).unwrap();
            verify(&c7, 3, Rule::Ts, &seq, &seq.end()).unwrap();
            cur = seq.end();
        }
        assert_eq!(cur, cover);

        let c6 = Graph::cycle(6).unwrap();
        assert!(matches!(rotate(&c6, 3, &set(&[0, 3]), 0, Direction::Clockwise), Err(Error::Precondition(_))));
    }

    #[test]
    fn blocks_rotate_front_first() {
        // Starting at 3, the naive order 3, 6, 0, 1, 2 would slide 0 onto 1.
        let c8 = Graph::cycle(8).unwrap();
        let cover = set(&[0, 1, 2, 3, 6]);
        assert!(rotate(&c8, 3, &cover, 6, Direction::Clockwise).is_err());
        let seq = rotate(&c8, 3, &cover, 3, Direction::Clockwise).unwrap();
        assert_eq!(seq.steps[2..], [Step::Slide(2, 3), Step::Slide(1, 2), Step::Slide(0, 1)]);
        verify(&c8, 3, Rule::Ts, &seq, &set(&[1, 2, 3, 4, 7])).unwrap();
    }

    #[test]
    fn cutting() {
        let c7 = Graph::cycle(7).unwrap();
        let (i, j) = (set(&[0, 2, 4]), set(&[0, 3, 5]));
        let cut = cut_cycle(&c7, 3, &i, &j, 0).unwrap();
        assert_eq!(cut.path.n(), 6);
        assert_eq!(cut.to_cycle, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(cut.i, set(&[1, 3]));
        let out = crate::path::solve_path_tj(&cut.path, 3, &cut.i, &cut.j).unwrap();
        let lifted = cut.lift(out.sequence().unwrap());
        assert_eq!(lifted.len(), out.sequence().unwrap().len());
        verify(&c7, 3, Rule::Tj, &lifted, &j).unwrap();
        assert!(matches!(cut_cycle(&c7, 3, &i, &set(&[1, 3, 5]), 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn solve_examples() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(
            solve_cycle(&c6, 3, &set(&[0, 3]), &set(&[1, 4]), Rule::Tj).unwrap(),
            SolveOutcome::No(NoReason::FrozenMinimumCycle)
        );
        let c7 = Graph::cycle(7).unwrap();
        let (i, j) = (set(&[0, 2, 4]), set(&[1, 3, 5]));
        let out = solve_cycle(&c7, 3, &i, &j, Rule::Ts).unwrap();
        verify(&c7, 3, Rule::Ts, out.sequence().unwrap(), &j).unwrap();
        assert!(solve_cycle(&c7, 3, &i, &i, Rule::Tj).unwrap().sequence().unwrap().is_empty());
    }

    #[test]
    fn tar_examples() {
        let c6 = Graph::cycle(6).unwrap();
        let (i, j) = (set(&[0, 3]), set(&[1, 4]));
        assert!(!solve_cycle_tar(&c6, 3, &i, &j, 3).unwrap().is_yes());
        let out = solve_cycle_tar(&c6, 3, &i, &j, 4).unwrap();
        verify(&c6, 3, Rule::Tar { cap: 4 }, out.sequence().unwrap(), &j).unwrap();
        assert!(solve_cycle_tar(&c6, 3, &i, &i, 2).unwrap().is_yes());
    }

    #[test]
    fn lemma11() {
        let inst = lemma11_family(3).unwrap();
        assert_eq!(inst.graph.n(), 8);
        assert_eq!(inst.i, set(&[0, 3, 6]));
        assert_eq!(inst.j, set(&[1, 4, 7]));
        for k in 3..=6 {
            let inst = lemma11_family(k).unwrap();
            verify(&inst.graph, k, Rule::Tj, &lemma11_witness(k).unwrap(), &inst.j).unwrap();
        }
        assert!(lemma11_family(2).is_err());
    }
    #[test]
    fn gap_cover_check_matches_search() {
        for n in 3..=10 {
            let g = Graph::cycle(n).unwrap();
            let frame = CycleFrame::new(&g).unwrap();
            for k in 2..=5 {
                for mask in 0u64..1 << n {
                    let c = CoverSet::from_mask(mask);
                    assert_eq!(frame.require_cover(&g, &c, k, "c").is_ok(), g.is_kpvc(&c, k), "n={n} k={k} {mask:b}");
                }
            }
        }
        let g = Graph::cycle(5).unwrap();
        assert!(matches!(CycleFrame::new(&g).unwrap().require_cover(&g, &CoverSet::new([9]), 2, "c"), Err(Error::VertexOutOfRange { .. })));
    }
}
