//! Trees: the partition into properly rooted subtrees, minimum covers, and
//! the TJ and TAR solvers built on them.

use crate::error::{Error, Result};
use crate::graph::{check_k, CoverSet, Graph};
use crate::reconfig::{NoReason, ReconfSequence, SolveOutcome, Step};
use crate::tar;

/// Partition of a tree into `ψ_k(T)` connected parts, each with an anchor
/// vertex that alone covers every k-path inside its part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePartition {
    pub root: usize,
    /// Sorted vertex lists in discovery order.
    pub parts: Vec<Vec<usize>>,
    pub anchors: Vec<usize>,
    /// Index into `parts` for every vertex; `None` only when `parts` is empty.
    pub part_of: Vec<Option<usize>>,
}

pub(crate) fn check_tree(t: &Graph) -> Result<()> {
    if t.n() == 0 || t.num_edges() + 1 != t.n() || !t.is_connected() {
        return Err(Error::WrongShape { expected: "tree" });
    }
    Ok(())
}

/// Preorder from `r` with parents.
fn preorder(t: &Graph, r: usize) -> (Vec<usize>, Vec<usize>) {
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![r];
    parent[r] = r;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in t.neighbors(v).iter().rev() {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    (order, parent)
}

/// Bottom-up scan: `down[v]` is the number of vertices on the longest path
/// from `v` down into what is left of its subtree. `T_v` is properly rooted
/// when the two longest arms through `v` reach `k` vertices; it is then cut
/// off and contributes nothing upwards. Vertices above the last cut join the
/// part found last.
pub fn partition_tree(t: &Graph, k: usize, r: usize) -> Result<TreePartition> {
    check_k(k)?;
    check_tree(t)?;
    t.check_vertex(r)?;
    let n = t.n();
    let (order, parent) = preorder(t, r);
    let mut down = vec![0usize; n];
    let mut best = vec![(0usize, 0usize); n];
    let mut cut_index = vec![usize::MAX; n];
    let mut anchors = Vec::new();
    for &v in order.iter().rev() {
        let (d1, d2) = best[v];
        if 1 + d1 + d2 >= k {
            cut_index[v] = anchors.len();
            anchors.push(v);
        } else {
            down[v] = 1 + d1;
        }
        if v != r {
            let p = parent[v];
            let d = down[v];
            let b = &mut best[p];
            if d > b.0 {
                *b = (d, b.0);
            } else if d > b.1 {
                b.1 = d;
            }
        }
    }
    let mut part_of = vec![None; n];
    let mut parts = vec![Vec::new(); anchors.len()];
    for &v in &order {
        let inherited = if v == r { None } else { part_of[parent[v]] };
        let own = (cut_index[v] != usize::MAX).then_some(cut_index[v]);
        part_of[v] = own.or(inherited);
    }
    if let Some(last) = anchors.len().checked_sub(1) {
        for p in part_of.iter_mut() {
            p.get_or_insert(last);
        }
    }
    for (v, p) in part_of.iter().enumerate() {
        if let Some(p) = *p {
            parts[p].push(v);
        }
    }
    Ok(TreePartition { root: r, parts, anchors, part_of })
}

/// A minimum k-PVC: the anchors of [`partition_tree`].
pub fn min_cover_tree(t: &Graph, k: usize, r: usize) -> Result<CoverSet> {
    Ok(CoverSet::new(partition_tree(t, k, r)?.anchors))
}

/// Jumps from `c` to a cover that contains every anchor and otherwise keeps
/// the smallest vertices of `c`.
///
/// Step 1 visits the parts in order and, if the anchor is free, jumps the
/// smallest token of that part onto it. Step 2 pairs the leftover tokens
/// with the unfilled members of the canonical target.
fn to_canonical(part: &TreePartition, c: &CoverSet, target: &CoverSet) -> Vec<Step> {
    let mut cur = c.clone();
    let mut steps = Vec::new();
    for (p, &a) in part.anchors.iter().enumerate() {
        if cur.contains(a) {
            continue;
        }
        let donor = cur
            .iter()
            .find(|&v| part.part_of[v] == Some(p))
            .expect("every cover meets every part");
        cur.remove(donor);
        cur.insert(a);
        steps.push(Step::Jump(donor, a));
    }
    let from = cur.difference(target);
    let to = target.difference(&cur);
    for (x, y) in from.iter().zip(to.iter()) {
        steps.push(Step::Jump(x, y));
    }
    steps
}

/// `I*`: the anchors plus the smallest vertices of `I` outside them.
fn completion(anchors: &CoverSet, i: &CoverSet) -> CoverSet {
    let mut out = anchors.clone();
    for v in i.difference(anchors).iter() {
        if out.len() >= i.len() {
            break;
        }
        out.insert(v);
    }
    out
}

fn tj_core(part: &TreePartition, i: &CoverSet, j: &CoverSet) -> Result<ReconfSequence> {
    let anchors = CoverSet::new(part.anchors.iter().copied());
    let target = completion(&anchors, i);
    let si = ReconfSequence::new(i.clone(), to_canonical(part, i, &target));
    let sj = ReconfSequence::new(j.clone(), to_canonical(part, j, &target));
    si.concat(&sj.reverse())
}

fn checked(t: &Graph, k: usize, i: &CoverSet, j: &CoverSet) -> Result<TreePartition> {
    let part = partition_tree(t, k, 0)?;
    t.require_cover(i, k, "I")?;
    t.require_cover(j, k, "J")?;
    Ok(part)
}

/// TJ on trees: reachable exactly when the sizes agree. The sequence goes
/// through a canonical cover containing the anchors; the partition is rooted
/// at vertex 0.
pub fn solve_tree_tj(t: &Graph, k: usize, i: &CoverSet, j: &CoverSet) -> Result<SolveOutcome> {
    let part = checked(t, k, i, j)?;
    if i.len() != j.len() {
        return Ok(SolveOutcome::No(NoReason::SizeMismatch));
    }
    if i == j {
        return Ok(SolveOutcome::Yes(ReconfSequence::empty(i.clone())));
    }
    Ok(SolveOutcome::Yes(tj_core(&part, i, j)?))
}

/// TAR(u) on trees. When `u` equals the larger endpoint size both sides
/// must first drop a token; any token whose removal keeps a cover will do.
pub fn solve_tree_tar(
    t: &Graph,
    k: usize,
    i: &CoverSet,
    j: &CoverSet,
    u: usize,
) -> Result<SolveOutcome> {
    let part = checked(t, k, i, j)?;
    tar::solve_by_levels(
        t.n(),
        i,
        j,
        u,
        part.anchors.len(),
        |c| c.iter().find(|&v| t.is_kpvc(&c.without(v), k)),
        |a, b| tj_core(&part, a, b),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reconfig::{verify, Rule};

    fn set(v: &[usize]) -> CoverSet {
        CoverSet::new(v.iter().copied())
    }

    fn star() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn path_partition() {
        let p7 = Graph::path(7).unwrap();
        let part = partition_tree(&p7, 3, 0).unwrap();
        assert_eq!(part.anchors, vec![4, 1]);
        assert_eq!(part.parts, vec![vec![4, 5, 6], vec![0, 1, 2, 3]]);
        assert_eq!(min_cover_tree(&p7, 3, 0).unwrap(), set(&[1, 4]));
    }

    #[test]
    fn star_partition() {
        let part = partition_tree(&star(), 3, 0).unwrap();
        assert_eq!(part.parts, vec![vec![0, 1, 2, 3]]);
        assert_eq!(part.anchors, vec![0]);
        // Rooting at a leaf still finds the center.
        assert_eq!(min_cover_tree(&star(), 3, 2).unwrap(), set(&[0]));
    }

    #[test]
    fn short_path_has_no_parts() {
        let p2 = Graph::path(2).unwrap();
        let part = partition_tree(&p2, 3, 0).unwrap();
        assert!(part.parts.is_empty());
        assert_eq!(part.part_of, vec![None, None]);
        assert!(min_cover_tree(&p2, 3, 0).unwrap().is_empty());
    }

    #[test]
    fn rejects_non_trees() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(matches!(partition_tree(&c4, 3, 0), Err(Error::WrongShape { .. })));
    }

    #[test]
    fn tj_examples() {
        let p7 = Graph::path(7).unwrap();
        let (i, j) = (set(&[2, 5]), set(&[1, 4]));
        let out = solve_tree_tj(&p7, 3, &i, &j).unwrap();
        verify(&p7, 3, Rule::Tj, out.sequence().unwrap(), &j).unwrap();
        assert_eq!(
            solve_tree_tj(&p7, 3, &i, &set(&[1, 3, 5])).unwrap(),
            SolveOutcome::No(NoReason::SizeMismatch)
        );
        assert!(solve_tree_tj(&p7, 3, &i, &i).unwrap().sequence().unwrap().is_empty());
    }

    #[test]
    fn tar_examples() {
        let t = Graph::from_edges(7, &[(0, 1), (1, 2), (1, 3), (0, 4), (4, 5), (4, 6)]).unwrap();
        let psi = min_cover_tree(&t, 3, 0).unwrap();
        assert_eq!(psi, set(&[1, 4]));
        let other = set(&[0, 1, 4]);
        let out = solve_tree_tar(&t, 3, &psi, &other, 3).unwrap();
        verify(&t, 3, Rule::Tar { cap: 3 }, out.sequence().unwrap(), &other).unwrap();
        assert_eq!(
            solve_tree_tar(&t, 3, &psi, &other, 2).unwrap(),
            SolveOutcome::No(NoReason::CapacityBlocked)
        );
    }
}
