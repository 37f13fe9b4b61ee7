//! Paths: shortest TJ and TS sequences and the TAR decision.
//!
//! Solvers work on *positions* along the path order, so any labeling of a
//! path graph is accepted; results are mapped back to vertex ids.

use crate::error::{Error, Result};
use crate::graph::{check_k, CoverSet, Graph, GraphShape};
use crate::reconfig::{NoReason, ReconfSequence, SolveOutcome, Step};
use crate::tar;

/// Vertex order along a path and its inverse.
pub(crate) struct PathFrame {
    pub order: Vec<usize>,
    pub pos: Vec<usize>,
}

impl PathFrame {
    pub fn new(g: &Graph) -> Result<PathFrame> {
        match g.classify() {
            GraphShape::Path { order } => Ok(PathFrame::from_order(order)),
            _ => Err(Error::WrongShape { expected: "path" }),
        }
    }

    pub fn from_order(order: Vec<usize>) -> PathFrame {
        let mut pos = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        PathFrame { order, pos }
    }

    pub fn positions(&self, c: &CoverSet) -> Vec<usize> {
        let mut p: Vec<usize> = c.iter().map(|v| self.pos[v]).collect();
        p.sort_unstable();
        p
    }

    /// Cover check by token gaps: no run of `k` free positions. Falls back
    /// to the graph search for the error and its witness.
    pub fn require_cover(&self, g: &Graph, c: &CoverSet, k: usize, which: &str) -> Result<()> {
        let n = self.order.len();
        if c.max().is_none_or(|m| m < n) {
            let p = self.positions(c);
            let mut prev = None;
            let ok = p.iter().chain([&n]).all(|&x| {
                let free = prev.map_or(x, |q| x - q - 1);
                prev = Some(x);
                free < k
            });
            if ok {
                return Ok(());
            }
        }
        g.require_cover(c, k, which)
    }
}

/// Algorithm 2 on sorted positions of equal length: the rightmost vertex of
/// the symmetric difference jumps onto the rightmost vertex of the other
/// side. Moves of J are recorded separately and replayed backwards.
pub(crate) fn tj_moves(ipos: &[usize], jpos: &[usize]) -> Vec<(usize, usize)> {
    debug_assert_eq!(ipos.len(), jpos.len());
    let (mut a, mut b) = (Vec::new(), Vec::new());
    let (mut x, mut y) = (0, 0);
    while x < ipos.len() || y < jpos.len() {
        match (ipos.get(x), jpos.get(y)) {
            (Some(p), Some(q)) if p == q => {
                x += 1;
                y += 1;
            }
            (Some(&p), Some(&q)) if p < q => {
                a.push(p);
                x += 1;
            }
            (Some(&p), None) => {
                a.push(p);
                x += 1;
            }
            (_, Some(&q)) => {
                b.push(q);
                y += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    let mut s_i = Vec::new();
    let mut s_j = Vec::new();
    while let (Some(&p), Some(&q)) = (a.last(), b.last()) {
        a.pop();
        b.pop();
        if p > q {
            s_i.push((p, q));
        } else {
            s_j.push((q, p));
        }
    }
    s_i.extend(s_j.into_iter().rev().map(|(from, to)| (to, from)));
    s_i
}

/// Tokens on a path with per-position ranks, moved only rightwards.
struct Side {
    occ: Vec<bool>,
    rank: Vec<usize>,
    pos: Vec<usize>,
    moves: Vec<(usize, usize)>,
}

impl Side {
    fn new(n: usize, positions: &[usize]) -> Side {
        let mut occ = vec![false; n];
        let mut rank = vec![usize::MAX; n];
        for (r, &p) in positions.iter().enumerate() {
            occ[p] = true;
            rank[p] = r;
        }
        Side { occ, rank, pos: positions.to_vec(), moves: Vec::new() }
    }

    /// Move the token at `i` one step right, first shifting the block of
    /// tokens directly ahead of it (deepest first), as Function 3 does.
    fn advance(&mut self, i: usize) -> Result<()> {
        let n = self.occ.len();
        let mut free = i + 1;
        while free < n && self.occ[free] {
            free += 1;
        }
        if free >= n {
            return Err(Error::Precondition(format!(
                "token at position {i} cannot move right: the path end is blocked"
            )));
        }
        for z in (i..free).rev() {
            let r = self.rank[z];
            self.occ.swap(z, z + 1);
            self.rank.swap(z, z + 1);
            self.pos[r] = z + 1;
            self.moves.push((z, z + 1));
        }
        Ok(())
    }
}

/// Algorithm 4: match the p-th token of I with the p-th of J and push the
/// one further left rightwards until they meet.
pub(crate) fn ts_moves(n: usize, ipos: &[usize], jpos: &[usize]) -> Result<Vec<(usize, usize)>> {
    debug_assert_eq!(ipos.len(), jpos.len());
    let mut a = Side::new(n, ipos);
    let mut b = Side::new(n, jpos);
    for p in 0..ipos.len() {
        loop {
            let (x, y) = (a.pos[p], b.pos[p]);
            if x < y {
                a.advance(x)?;
            } else if y < x {
                b.advance(y)?;
            } else {
                break;
            }
        }
    }
    let mut moves = a.moves;
    moves.extend(b.moves.into_iter().rev().map(|(from, to)| (to, from)));
    Ok(moves)
}

/// Whether dropping the token with sorted index `idx` keeps a cover on a
/// path with `n` vertices. Interior tokens need their neighbours within
/// distance `k`; the first and last token need at most `k - 1` free vertices
/// between the next token and the path end.
pub(crate) fn removable_at(n: usize, k: usize, pos: &[usize], idx: usize) -> bool {
    let s = pos.len();
    if s == 1 {
        return n < k;
    }
    if idx == 0 {
        pos[1] < k
    } else if idx == s - 1 {
        n - 1 - pos[s - 2] < k
    } else {
        pos[idx + 1] - pos[idx - 1] <= k
    }
}

fn steps_from_moves(
    frame: &PathFrame,
    moves: &[(usize, usize)],
    slide: bool,
) -> Vec<Step> {
    moves
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (frame.order[a], frame.order[b]);
            if slide {
                Step::Slide(x, y)
            } else {
                Step::Jump(x, y)
            }
        })
        .collect()
}

fn checked(g: &Graph, k: usize, i: &CoverSet, j: &CoverSet) -> Result<PathFrame> {
    check_k(k)?;
    let frame = PathFrame::new(g)?;
    frame.require_cover(g, i, k, "I")?;
    frame.require_cover(g, j, k, "J")?;
    Ok(frame)
}

/// Shortest TJ sequence, of length `|I Δ J| / 2`, in O(n).
pub fn solve_path_tj(g: &Graph, k: usize, i: &CoverSet, j: &CoverSet) -> Result<SolveOutcome> {
    let frame = checked(g, k, i, j)?;
    if i.len() != j.len() {
        return Ok(SolveOutcome::No(NoReason::SizeMismatch));
    }
    let moves = tj_moves(&frame.positions(i), &frame.positions(j));
    Ok(SolveOutcome::Yes(ReconfSequence::new(i.clone(), steps_from_moves(&frame, &moves, false))))
}

/// Shortest TS sequence, of length `sum |i_p - j_p|` over rank-matched
/// tokens, in O(n^2).
pub fn solve_path_ts(g: &Graph, k: usize, i: &CoverSet, j: &CoverSet) -> Result<SolveOutcome> {
    let frame = checked(g, k, i, j)?;
    if i.len() != j.len() {
        return Ok(SolveOutcome::No(NoReason::SizeMismatch));
    }
    let moves = ts_moves(g.n(), &frame.positions(i), &frame.positions(j))?;
    Ok(SolveOutcome::Yes(ReconfSequence::new(i.clone(), steps_from_moves(&frame, &moves, true))))
}

/// TS sequence moving the token at path position `i` to position `j`,
/// shifting blocking tokens right first. Positions follow the path order and
/// coincide with vertex ids for [`Graph::path`].
pub fn push(g: &Graph, k: usize, cover: &CoverSet, i: usize, j: usize) -> Result<ReconfSequence> {
    check_k(k)?;
    let frame = PathFrame::new(g)?;
    frame.require_cover(g, cover, k, "cover")?;
    let n = g.n();
    let pos = frame.positions(cover);
    if !(i < j && j <= i + k && j < n) {
        return Err(Error::Precondition(format!(
            "push needs i < j <= i + k and j < n, got i={i}, j={j}, k={k}, n={n}"
        )));
    }
    if pos.binary_search(&i).is_err() {
        return Err(Error::Precondition(format!("no token at position {i}")));
    }
    // The vertices between the previous token and `j` lose their cover.
    let behind = pos.iter().rev().find(|&&p| p < i).map_or(0, |&p| p + 1);
    if j - behind >= k {
        return Err(Error::Precondition(format!(
            "moving the token at {i} to {j} uncovers positions {behind}..{j}"
        )));
    }
    let mut side = Side::new(n, &pos);
    let mut at = i;
    while at < j {
        side.advance(at)?;
        at += 1;
    }
    Ok(ReconfSequence::new(cover.clone(), steps_from_moves(&frame, &side.moves, true)))
}

/// Smallest-id token whose removal keeps a cover.
pub(crate) fn removable_token(frame: &PathFrame, k: usize, c: &CoverSet) -> Option<usize> {
    let pos = frame.positions(c);
    let n = frame.order.len();
    (0..pos.len())
        .filter(|&idx| removable_at(n, k, &pos, idx))
        .map(|idx| frame.order[pos[idx]])
        .min()
}

/// Smallest-id token of `c` whose removal keeps a k-PVC of the path `g`,
/// decided from token gaps alone.
pub fn removable_token_for(g: &Graph, k: usize, c: &CoverSet) -> Result<Option<usize>> {
    check_k(k)?;
    let frame = PathFrame::new(g)?;
    frame.require_cover(g, c, k, "cover")?;
    Ok(removable_token(&frame, k, c))
}

/// TAR(u) decision with a witness sequence.
pub fn solve_path_tar(
    g: &Graph,
    k: usize,
    i: &CoverSet,
    j: &CoverSet,
    u: usize,
) -> Result<SolveOutcome> {
    let frame = checked(g, k, i, j)?;
    let n = g.n();
    tar::solve_by_levels(
        n,
        i,
        j,
        u,
        n / k,
        |c| removable_token(&frame, k, c),
        |a, b| {
            let moves = tj_moves(&frame.positions(a), &frame.positions(b));
            Ok(ReconfSequence::new(a.clone(), steps_from_moves(&frame, &moves, false)))
        },
    )
}
