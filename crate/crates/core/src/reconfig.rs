//! Reconfiguration rules, steps and sequences, plus the sequence verifier
//! and the TJ / TAR(s+1) converters.

use std::fmt;

use crate::error::{Error, Result, VerifyError, VerifyErrorKind};
use crate::graph::{CoverSet, Graph};

/// Reconfiguration rule. `Tar` carries the capacity `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Ts,
    Tj,
    Tar { cap: usize },
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Ts => write!(f, "TS"),
            Rule::Tj => write!(f, "TJ"),
            Rule::Tar { cap } => write!(f, "TAR({cap})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Slide(usize, usize),
    Jump(usize, usize),
    Add(usize),
    Remove(usize),
}

impl Step {
    /// The inverse step.
    pub fn inverse(self) -> Step {
        match self {
            Step::Slide(a, b) => Step::Slide(b, a),
            Step::Jump(a, b) => Step::Jump(b, a),
            Step::Add(v) => Step::Remove(v),
            Step::Remove(v) => Step::Add(v),
        }
    }

    /// Apply to a set without any validity checks.
    pub fn apply(self, set: &mut CoverSet) {
        match self {
            Step::Slide(a, b) | Step::Jump(a, b) => {
                set.remove(a);
                set.insert(b);
            }
            Step::Add(v) => {
                set.insert(v);
            }
            Step::Remove(v) => {
                set.remove(v);
            }
        }
    }

    /// Relabel both endpoints through `map`.
    pub fn map(self, map: impl Fn(usize) -> usize) -> Step {
        match self {
            Step::Slide(a, b) => Step::Slide(map(a), map(b)),
            Step::Jump(a, b) => Step::Jump(map(a), map(b)),
            Step::Add(v) => Step::Add(map(v)),
            Step::Remove(v) => Step::Remove(map(v)),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Slide(a, b) => write!(f, "slide {a} {b}"),
            Step::Jump(a, b) => write!(f, "jump {a} {b}"),
            Step::Add(v) => write!(f, "add {v}"),
            Step::Remove(v) => write!(f, "remove {v}"),
        }
    }
}

/// A start state and the steps applied to it. The length is the number of
/// steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconfSequence {
    pub start: CoverSet,
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NoReason {
    SizeMismatch,
    FrozenMinimumCycle,
    CapacityBlocked,
    NoRemovableToken,
    /// Reported by the exhaustive oracle only.
    Unreachable,
}

impl fmt::Display for NoReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NoReason::SizeMismatch => "SizeMismatch",
            NoReason::FrozenMinimumCycle => "FrozenMinimumCycle",
            NoReason::CapacityBlocked => "CapacityBlocked",
            NoReason::NoRemovableToken => "NoRemovableToken",
            NoReason::Unreachable => "Unreachable",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Yes(ReconfSequence),
    No(NoReason),
}

impl SolveOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, SolveOutcome::Yes(_))
    }

    pub fn sequence(&self) -> Option<&ReconfSequence> {
        match self {
            SolveOutcome::Yes(s) => Some(s),
            SolveOutcome::No(_) => None,
        }
    }
}

impl ReconfSequence {
    pub fn new(start: CoverSet, steps: Vec<Step>) -> Self {
        ReconfSequence { start, steps }
    }

    pub fn empty(start: CoverSet) -> Self {
        ReconfSequence { start, steps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// All `len() + 1` states, computed without validity checks.
    pub fn states(&self) -> Vec<CoverSet> {
        let mut cur = self.start.clone();
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(cur.clone());
        for &step in &self.steps {
            step.apply(&mut cur);
            out.push(cur.clone());
        }
        out
    }

    pub fn end(&self) -> CoverSet {
        let mut cur = self.start.clone();
        for &step in &self.steps {
            step.apply(&mut cur);
        }
        cur
    }

    pub fn reverse(&self) -> ReconfSequence {
        ReconfSequence {
            start: self.end(),
            steps: self.steps.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &ReconfSequence) -> Result<ReconfSequence> {
        let end = self.end();
        if end != other.start {
            return Err(Error::ConcatMismatch {
                end: end.as_slice().to_vec(),
                start: other.start.as_slice().to_vec(),
            });
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Ok(ReconfSequence { start: self.start.clone(), steps })
    }

    /// Relabel every vertex through `map`.
    pub fn map(&self, map: impl Fn(usize) -> usize + Copy) -> ReconfSequence {
        ReconfSequence {
            start: self.start.iter().map(map).collect(),
            steps: self.steps.iter().map(|s| s.map(map)).collect(),
        }
    }

    /// Parse the text format written by `Display`.
    pub fn parse(text: &str) -> Result<ReconfSequence> {
        let mut start = None;
        let mut steps = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            let toks = tokens(line);
            let Some(&(col, head)) = toks.first() else {
                continue;
            };
            let err = |col: usize, msg: String| Error::Parse { line: lineno + 1, col, msg };
            let nums = |want: usize| -> Result<Vec<usize>> {
                if toks.len() - 1 != want {
                    return Err(err(col, format!("`{head}` expects {want} vertex id(s)")));
                }
                toks[1..].iter().map(|&(c, t)| parse_id(t).ok_or_else(|| err(c, format!("bad vertex id `{t}`")))).collect()
            };
            match head {
                "start:" => {
                    if start.is_some() {
                        return Err(err(col, "duplicate `start:` line".into()));
                    }
                    let ids = toks[1..]
                        .iter()
                        .map(|&(c, t)| parse_id(t).ok_or_else(|| err(c, format!("bad vertex id `{t}`"))))
                        .collect::<Result<Vec<_>>>()?;
                    start = Some(CoverSet::new(ids));
                }
                _ if start.is_none() => {
                    return Err(err(col, "sequence must begin with `start:`".into()));
                }
                "slide" => {
                    let v = nums(2)?;
                    steps.push(Step::Slide(v[0], v[1]));
                }
                "jump" => {
                    let v = nums(2)?;
                    steps.push(Step::Jump(v[0], v[1]));
                }
                "add" => steps.push(Step::Add(nums(1)?[0])),
                "remove" => steps.push(Step::Remove(nums(1)?[0])),
                other => return Err(err(col, format!("unknown step `{other}`"))),
            }
        }
        let start = start.ok_or(Error::Parse { line: 1, col: 1, msg: "missing `start:` line".into() })?;
        Ok(ReconfSequence { start, steps })
    }
}

/// Whitespace-separated tokens with 1-based columns.
pub(crate) fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut begin = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), begin) {
            (true, Some(b)) => {
                out.push((b + 1, &line[b..i]));
                begin = None;
            }
            (false, None) => begin = Some(i),
            _ => {}
        }
    }
    if let Some(b) = begin {
        out.push((b + 1, &line[b..]));
    }
    out
}

pub(crate) fn parse_id(t: &str) -> Option<usize> {
    t.parse().ok()
}

impl fmt::Display for ReconfSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "start:")?;
        for v in self.start.iter() {
            write!(f, " {v}")?;
        }
        writeln!(f)?;
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

fn fail(step: Option<usize>, kind: VerifyErrorKind) -> VerifyError {
    VerifyError { step, kind }
}

/// Check that `seq` is a valid `rule`-sequence on `g` ending at `target`.
///
/// States are re-checked locally: after a vertex loses its token only the
/// k-paths through that vertex can become uncovered.
pub fn verify(
    g: &Graph,
    k: usize,
    rule: Rule,
    seq: &ReconfSequence,
    target: &CoverSet,
) -> std::result::Result<(), VerifyError> {
    let n = g.n();
    if let Some(v) = seq.start.iter().find(|&v| v >= n) {
        return Err(fail(None, VerifyErrorKind::OutOfRange(v)));
    }
    let mut occ = seq.start.occupancy(n);
    if let Some(p) = g.uncovered_k_path_occ(&occ, k) {
        return Err(fail(None, VerifyErrorKind::StartNotCover(p)));
    }
    let mut size = seq.start.len();
    if let Rule::Tar { cap } = rule {
        if size > cap {
            return Err(fail(None, VerifyErrorKind::CapacityExceeded { size, cap }));
        }
    }
    for (i, &step) in seq.steps.iter().enumerate() {
        let at = Some(i);
        let mismatch = || fail(at, VerifyErrorKind::RuleMismatch { step: step.to_string(), rule: rule.to_string() });
        let in_range = |v: usize| if v < n { Ok(()) } else { Err(fail(at, VerifyErrorKind::OutOfRange(v))) };
        let vacated = match step {
            Step::Slide(a, b) | Step::Jump(a, b) => {
                if matches!(rule, Rule::Tar { .. }) {
                    return Err(mismatch());
                }
                in_range(a)?;
                in_range(b)?;
                if a == b {
                    return Err(fail(at, VerifyErrorKind::SelfJump(a)));
                }
                let needs_edge = matches!(step, Step::Slide(..)) || rule == Rule::Ts;
                if needs_edge && !g.has_edge(a, b) {
                    return Err(fail(at, VerifyErrorKind::NonAdjacentSlide(a, b)));
                }
                if !occ[a] {
                    return Err(fail(at, VerifyErrorKind::MissingToken(a)));
                }
                if occ[b] {
                    return Err(fail(at, VerifyErrorKind::Occupied(b)));
                }
                occ[a] = false;
                occ[b] = true;
                Some(a)
            }
            Step::Add(v) => {
                let Rule::Tar { cap } = rule else {
                    return Err(mismatch());
                };
                in_range(v)?;
                if occ[v] {
                    return Err(fail(at, VerifyErrorKind::Occupied(v)));
                }
                occ[v] = true;
                size += 1;
                if size > cap {
                    return Err(fail(at, VerifyErrorKind::CapacityExceeded { size, cap }));
                }
                None
            }
            Step::Remove(v) => {
                if !matches!(rule, Rule::Tar { .. }) {
                    return Err(mismatch());
                }
                in_range(v)?;
                if !occ[v] {
                    return Err(fail(at, VerifyErrorKind::MissingToken(v)));
                }
                occ[v] = false;
                size -= 1;
                Some(v)
            }
        };
        if let Some(x) = vacated {
            if let Some(p) = g.uncovered_k_path_through(x, &occ, k) {
                return Err(fail(at, VerifyErrorKind::NotCover(p)));
            }
        }
    }
    let got: Vec<usize> = (0..n).filter(|&v| occ[v]).collect();
    if got != target.as_slice() {
        return Err(fail(
            None,
            VerifyErrorKind::TargetMismatch { got, want: target.as_slice().to_vec() },
        ));
    }
    Ok(())
}

/// Expand every jump or slide `x -> y` into `Add(y), Remove(x)`. No checks.
pub(crate) fn expand_to_tar(seq: &ReconfSequence) -> ReconfSequence {
    let mut steps = Vec::with_capacity(2 * seq.len());
    for &s in &seq.steps {
        match s {
            Step::Slide(x, y) | Step::Jump(x, y) => {
                steps.push(Step::Add(y));
                steps.push(Step::Remove(x));
            }
            other => steps.push(other),
        }
    }
    ReconfSequence { start: seq.start.clone(), steps }
}

/// Turn a TJ sequence with states of size `s` into a TAR(s+1) sequence of
/// twice the length.
pub fn tj_to_tar(g: &Graph, k: usize, seq: &ReconfSequence) -> Result<ReconfSequence> {
    verify(g, k, Rule::Tj, seq, &seq.end())?;
    Ok(expand_to_tar(seq))
}

/// Normalize a TAR(s+1) sequence between two covers of size `s` into a TJ
/// sequence of at most half the length.
///
/// Repeatedly take the first removal that drops the size to `s - 1` and the
/// next addition after it. If that addition re-adds a vertex removed in
/// between, both steps are redundant and dropped; otherwise the addition is
/// moved in front of the removal. Once no state falls below `s` the steps
/// alternate add/remove and pair up into jumps.
pub fn tar_to_tj(g: &Graph, k: usize, seq: &ReconfSequence) -> Result<ReconfSequence> {
    let s = seq.start.len();
    let end = seq.end();
    if end.len() != s {
        return Err(Error::Precondition(format!(
            "endpoints have sizes {s} and {}",
            end.len()
        )));
    }
    verify(g, k, Rule::Tar { cap: s + 1 }, seq, &end)?;
    let mut ops: Vec<(bool, usize)> = Vec::with_capacity(seq.len());
    for &step in &seq.steps {
        match step {
            Step::Add(v) => ops.push((true, v)),
            Step::Remove(v) => ops.push((false, v)),
            _ => unreachable!("verified TAR sequences contain only add/remove"),
        }
    }
    loop {
        let mut size = s;
        let mut low = None;
        for (i, &(add, _)) in ops.iter().enumerate() {
            if add {
                size += 1;
            } else {
                size -= 1;
                if size + 1 == s {
                    low = Some(i);
                    break;
                }
            }
        }
        let Some(a) = low else { break };
        let b = a + ops[a..]
            .iter()
            .position(|&(add, _)| add)
            .expect("size returns to s, so an addition follows");
        let y = ops[b].1;
        if let Some(c) = (a..b).find(|&c| ops[c] == (false, y)) {
            ops.remove(b);
            ops.remove(c);
        } else {
            let op = ops.remove(b);
            ops.insert(a, op);
        }
    }
    let steps = ops
        .chunks(2)
        .filter_map(|pair| match pair {
            [(true, y), (false, x)] => (x != y).then_some(Step::Jump(*x, *y)),
            _ => unreachable!("normalized sequence alternates add/remove"),
        })
        .collect();
    Ok(ReconfSequence { start: seq.start.clone(), steps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> CoverSet {
        CoverSet::new(v.iter().copied())
    }

    #[test]
    fn trivial_sequence_verifies() {
        let g = Graph::path(6).unwrap();
        let i = set(&[1, 4]);
        assert!(verify(&g, 3, Rule::Tj, &ReconfSequence::empty(i.clone()), &i).is_ok());
    }

    #[test]
    fn p6_jumps() {
        let g = Graph::path(6).unwrap();
        let seq = ReconfSequence::new(set(&[1, 4]), vec![Step::Jump(1, 2), Step::Jump(4, 5)]);
        assert!(verify(&g, 3, Rule::Tj, &seq, &set(&[2, 5])).is_ok());
        // Moving 4 first leaves 2-3-4 uncovered.
        let early = ReconfSequence::new(set(&[1, 4]), vec![Step::Jump(4, 5), Step::Jump(1, 2)]);
        let err = verify(&g, 3, Rule::Tj, &early, &set(&[2, 5])).unwrap_err();
        assert_eq!(err.step, Some(0));
        // The same steps with a non-adjacent move are not a TS sequence.
        let bad = ReconfSequence::new(set(&[1, 4]), vec![Step::Slide(1, 2), Step::Slide(2, 5)]);
        let err = verify(&g, 3, Rule::Ts, &bad, &set(&[4, 5])).unwrap_err();
        assert!(err.to_string().contains("step 1: non-adjacent slide"), "{err}");
        let bad = ReconfSequence::new(set(&[1, 4]), vec![Step::Jump(1, 5)]);
        let err = verify(&g, 3, Rule::Ts, &bad, &set(&[4, 5])).unwrap_err();
        assert!(err.to_string().contains("non-adjacent slide"), "{err}");
    }

    #[test]
    fn verify_diagnostics() {
        let g = Graph::path(6).unwrap();
        let i = set(&[1, 4]);
        let cases = [
            (vec![Step::Jump(1, 0)], Rule::Tj, "step 0"),
            (vec![Step::Jump(2, 3)], Rule::Tj, "no token"),
            (vec![Step::Jump(1, 4)], Rule::Tj, "already holds"),
            (vec![Step::Add(0)], Rule::Tj, "not a TJ step"),
            (vec![Step::Jump(1, 2)], Rule::Tar { cap: 3 }, "not a TAR(3) step"),
            (vec![Step::Add(0)], Rule::Tar { cap: 2 }, "capacity exceeded"),
        ];
        for (steps, rule, needle) in cases {
            let seq = ReconfSequence::new(i.clone(), steps);
            let err = verify(&g, 3, rule, &seq, &seq.end()).unwrap_err().to_string();
            assert!(err.contains(needle), "{err} lacks {needle}");
        }
        let seq = ReconfSequence::empty(i.clone());
        assert!(verify(&g, 3, Rule::Tj, &seq, &set(&[2, 5])).is_err());
        let seq = ReconfSequence::empty(set(&[1]));
        assert!(verify(&g, 3, Rule::Tj, &seq, &set(&[1])).is_err());
    }

    #[test]
    fn lemma1_expansion() {
        let g = Graph::path(6).unwrap();
        let tj = ReconfSequence::new(set(&[1, 4]), vec![Step::Jump(1, 2), Step::Jump(4, 5)]);
        let tar = tj_to_tar(&g, 3, &tj).unwrap();
        assert_eq!(tar.len(), 4);
        assert!(verify(&g, 3, Rule::Tar { cap: 3 }, &tar, &set(&[2, 5])).is_ok());
        let back = tar_to_tj(&g, 3, &tar).unwrap();
        assert_eq!(back, tj);

        let empty = ReconfSequence::empty(set(&[1, 4]));
        assert!(tj_to_tar(&g, 3, &empty).unwrap().is_empty());

        let c7 = Graph::cycle(7).unwrap();
        let one = ReconfSequence::new(set(&[0, 2, 4]), vec![Step::Jump(4, 5)]);
        let tar = tj_to_tar(&c7, 3, &one).unwrap();
        assert_eq!(tar.steps, vec![Step::Add(5), Step::Remove(4)]);
        assert_eq!(tar.states().iter().map(CoverSet::len).max(), Some(4));
    }

    #[test]
    fn tar_normalization() {
        let g = Graph::path(6).unwrap();
        let i = set(&[1, 4]);
        let add_rm = ReconfSequence::new(i.clone(), vec![Step::Add(2), Step::Remove(1)]);
        assert_eq!(tar_to_tj(&g, 3, &add_rm).unwrap().steps, vec![Step::Jump(1, 2)]);

        // {0,1,4}: removing 0 and putting it back is redundant.
        let g = Graph::path(6).unwrap();
        let big = set(&[0, 1, 4]);
        let rm_add = ReconfSequence::new(big.clone(), vec![Step::Remove(0), Step::Add(0)]);
        assert!(tar_to_tj(&g, 3, &rm_add).unwrap().is_empty());

        let rm_add = ReconfSequence::new(big, vec![Step::Remove(0), Step::Add(5)]);
        assert_eq!(tar_to_tj(&g, 3, &rm_add).unwrap().steps, vec![Step::Jump(0, 5)]);

        let uneven = ReconfSequence::new(i, vec![Step::Add(0)]);
        assert!(matches!(tar_to_tj(&g, 3, &uneven), Err(Error::Precondition(_))));
    }

    #[test]
    fn reverse_and_concat() {
        let i = set(&[1, 4]);
        let e = ReconfSequence::empty(i.clone());
        assert_eq!(e.reverse(), e);
        let s = ReconfSequence::new(i.clone(), vec![Step::Jump(1, 2)]);
        assert_eq!(s.reverse().steps, vec![Step::Jump(2, 1)]);
        assert_eq!(s.reverse().start, set(&[2, 4]));
        assert_eq!(s.concat(&ReconfSequence::empty(set(&[2, 4]))).unwrap(), s);
        assert_eq!(e.concat(&s).unwrap(), s);
        assert!(matches!(s.concat(&s), Err(Error::ConcatMismatch { .. })));
    }

    #[test]
    fn text_round_trip() {
        let s = ReconfSequence::new(
            set(&[1, 4]),
            vec![Step::Slide(4, 5), Step::Jump(1, 2), Step::Add(0), Step::Remove(0)],
        );
        let text = s.to_string();
        assert_eq!(ReconfSequence::parse(&text).unwrap(), s);
        assert_eq!(ReconfSequence::parse("start:\n").unwrap(), ReconfSequence::empty(CoverSet::empty()));
        let err = ReconfSequence::parse("start: 1\nhop 1 2\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 2, col: 1, msg: "unknown step `hop`".into() });
        assert!(ReconfSequence::parse("jump 1 2\n").is_err());
        assert!(ReconfSequence::parse("start: 1\njump 1 x\n").is_err());
    }
}
