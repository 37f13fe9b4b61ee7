//! Simple undirected graphs, shape recognition and k-path machinery.
//!
//! A *k-path* is a simple path on exactly `k` vertices. A vertex set is a
//! k-path vertex cover (k-PVC) when every k-path contains one of its vertices.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// Structural class of a graph, used to dispatch to the right solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphShape {
    /// `order` lists the vertices from one end of the path to the other.
    Path { order: Vec<usize> },
    /// `order` lists the vertices around the cycle starting at vertex 0.
    Cycle { order: Vec<usize> },
    Tree,
    General,
}

impl GraphShape {
    pub fn name(&self) -> &'static str {
        match self {
            GraphShape::Path { .. } => "path",
            GraphShape::Cycle { .. } => "cycle",
            GraphShape::Tree => "tree",
            GraphShape::General => "general",
        }
    }
}

/// A set of token positions, kept sorted and deduplicated.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoverSet {
    members: Vec<usize>,
}

impl CoverSet {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        CoverSet { members }
    }

    pub fn empty() -> Self {
        CoverSet::default()
    }

    pub fn from_mask(mask: u64) -> Self {
        CoverSet {
            members: (0..64).filter(|&v| mask >> v & 1 == 1).collect(),
        }
    }

    /// Bitmask encoding; `None` if a member does not fit in 64 bits.
    pub fn to_mask(&self) -> Option<u64> {
        self.members
            .iter()
            .try_fold(0u64, |m, &v| (v < 64).then(|| m | 1 << v))
    }

    /// `s` tokens spread evenly over `0..n`, shifted by `offset` modulo `n`.
    /// Consecutive tokens are at most `ceil(n/s)` apart, which makes this a
    /// k-PVC of `P_n` or `C_n` whenever `n <= s*k` and `offset < k`.
    pub fn spread(n: usize, s: usize, offset: usize) -> CoverSet {
        CoverSet::new((0..s.min(n)).map(|t| (t * n / s + offset) % n))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn max(&self) -> Option<usize> {
        self.members.last().copied()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.members.binary_search(&v) {
            Ok(_) => false,
            Err(at) => {
                self.members.insert(at, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: usize) -> bool {
        match self.members.binary_search(&v) {
            Ok(at) => {
                self.members.remove(at);
                true
            }
            Err(_) => false,
        }
    }

    pub fn with(&self, v: usize) -> CoverSet {
        let mut c = self.clone();
        c.insert(v);
        c
    }

    pub fn without(&self, v: usize) -> CoverSet {
        let mut c = self.clone();
        c.remove(v);
        c
    }

    pub fn intersection(&self, other: &CoverSet) -> CoverSet {
        CoverSet {
            members: self.iter().filter(|&v| other.contains(v)).collect(),
        }
    }

    pub fn difference(&self, other: &CoverSet) -> CoverSet {
        CoverSet {
            members: self.iter().filter(|&v| !other.contains(v)).collect(),
        }
    }

    pub fn symmetric_difference_len(&self, other: &CoverSet) -> usize {
        self.difference(other).len() + other.difference(self).len()
    }

    /// Occupancy vector of length `n`. Members `>= n` are ignored.
    pub fn occupancy(&self, n: usize) -> Vec<bool> {
        let mut occ = vec![false; n];
        for v in self.iter().filter(|&v| v < n) {
            occ[v] = true;
        }
        occ
    }
}

impl FromIterator<usize> for CoverSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        CoverSet::new(iter)
    }
}

impl fmt::Display for CoverSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub(crate) fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    Ok(())
}

impl Graph {
    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidSize("a path needs at least one vertex".into()));
        }
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidSize(format!(
                "a cycle needs at least three vertices, got {n}"
            )));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        let mut canon = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        for &(u, v) in &canon {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, edges: canon })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Canonical `(min, max)` edge list, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        Ok(())
    }

    /// Error unless `c` is a k-PVC of this graph; `which` names the set in
    /// the message (for example `"I"`).
    pub fn require_cover(&self, c: &CoverSet, k: usize, which: &str) -> Result<()> {
        check_k(k)?;
        c.iter().try_for_each(|v| self.check_vertex(v))?;
        match self.uncovered_k_path(c, k) {
            Some(witness) => Err(Error::NotACover { which: which.to_string(), witness }),
            None => Ok(()),
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    fn bfs(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Hop distance, `None` when `u` and `v` lie in different components.
    pub fn dist(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs(u)[v])
    }

    pub fn classify(&self) -> GraphShape {
        let n = self.n();
        match n {
            0 => return GraphShape::General,
            1 => return GraphShape::Path { order: vec![0] },
            _ => {}
        }
        let m = self.num_edges();
        let (mut max_deg, mut all_two) = (0, true);
        for a in &self.adj {
            max_deg = max_deg.max(a.len());
            all_two &= a.len() == 2;
        }
        // For max degree 2 a single walk decides connectivity.
        if m + 1 == n && max_deg <= 2 {
            if let Some(start) = (0..n).find(|&v| self.degree(v) == 1) {
                let order = self.walk(start);
                if order.len() == n {
                    return GraphShape::Path { order };
                }
            }
            return GraphShape::General;
        }
        if m == n && n >= 3 && all_two {
            let order = self.walk(0);
            if order.len() == n {
                return GraphShape::Cycle { order };
            }
            return GraphShape::General;
        }
        if m + 1 == n && self.is_connected() {
            return GraphShape::Tree;
        }
        GraphShape::General
    }

    /// Follows a max-degree-2 component from `start`, preferring the smaller
    /// neighbor on the first step.
    fn walk(&self, start: usize) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.n());
        order.push(start);
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = self.adj[cur].iter().copied().find(|&w| w != prev && w != start);
            match next {
                Some(w) if order.len() < self.n() => {
                    order.push(w);
                    prev = cur;
                    cur = w;
                }
                _ => return order,
            }
        }
    }

    /// All k-paths, each reported once with the smaller endpoint first,
    /// in lexicographic order.
    pub fn k_paths(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if k < 2 {
            return out;
        }
        let mut on = vec![false; self.n()];
        let mut path = Vec::with_capacity(k);
        for v in 0..self.n() {
            on[v] = true;
            path.push(v);
            self.collect_paths(k, &mut path, &mut on, &mut out);
            path.pop();
            on[v] = false;
        }
        out.sort();
        out
    }

    fn collect_paths(
        &self,
        k: usize,
        path: &mut Vec<usize>,
        on: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if path.len() == k {
            if path[0] < path[k - 1] {
                out.push(path.clone());
            }
            return;
        }
        let tail = *path.last().unwrap();
        for &w in &self.adj[tail] {
            if !on[w] {
                on[w] = true;
                path.push(w);
                self.collect_paths(k, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }

    pub fn is_kpvc(&self, cover: &CoverSet, k: usize) -> bool {
        self.uncovered_k_path(cover, k).is_none()
    }

    /// A k-path avoiding `cover`, if any, via depth-capped DFS.
    pub fn uncovered_k_path(&self, cover: &CoverSet, k: usize) -> Option<Vec<usize>> {
        self.uncovered_k_path_occ(&cover.occupancy(self.n()), k)
    }

    pub(crate) fn uncovered_k_path_occ(&self, occ: &[bool], k: usize) -> Option<Vec<usize>> {
        if k > self.n() {
            return None;
        }
        let mut on = vec![false; self.n()];
        let mut path = Vec::with_capacity(k);
        for v in 0..self.n() {
            if occ[v] {
                continue;
            }
            on[v] = true;
            path.push(v);
            if self.extend_free(k, &mut path, &mut on, occ) {
                return Some(canonical(path));
            }
            path.pop();
            on[v] = false;
        }
        None
    }

    fn extend_free(&self, k: usize, path: &mut Vec<usize>, on: &mut [bool], occ: &[bool]) -> bool {
        if path.len() == k {
            return true;
        }
        let tail = *path.last().unwrap();
        for &w in &self.adj[tail] {
            if !on[w] && !occ[w] {
                on[w] = true;
                path.push(w);
                if self.extend_free(k, path, on, occ) {
                    return true;
                }
                path.pop();
                on[w] = false;
            }
        }
        false
    }

    /// A k-path through `x` avoiding the occupied vertices, if any. Used to
    /// re-check a cover locally after the token on `x` leaves.
    pub(crate) fn uncovered_k_path_through(
        &self,
        x: usize,
        occ: &[bool],
        k: usize,
    ) -> Option<Vec<usize>> {
        if occ[x] || k > self.n() {
            return None;
        }
        let mut on = vec![false; self.n()];
        on[x] = true;
        let mut left = vec![x];
        self.grow_left(k, &mut left, &mut on, occ)
    }

    fn grow_left(
        &self,
        k: usize,
        left: &mut Vec<usize>,
        on: &mut [bool],
        occ: &[bool],
    ) -> Option<Vec<usize>> {
        let mut right = vec![left[0]];
        if self.extend_free(k - left.len() + 1, &mut right, on, occ) {
            let path: Vec<usize> = left.iter().rev().chain(&right[1..]).copied().collect();
            return Some(canonical(path));
        }
        if left.len() == k {
            return None;
        }
        let tail = *left.last().unwrap();
        for &w in &self.adj[tail] {
            if !on[w] && !occ[w] {
                on[w] = true;
                left.push(w);
                if let Some(p) = self.grow_left(k, left, on, occ) {
                    return Some(p);
                }
                left.pop();
                on[w] = false;
            }
        }
        None
    }
}

fn canonical(mut path: Vec<usize>) -> Vec<usize> {
    if path.first() > path.last() {
        path.reverse();
    }
    path
}

/// Minimum k-PVC size of a path or cycle on `n` vertices.
pub fn psi_k_closed_form(shape: &GraphShape, n: usize, k: usize) -> Result<usize> {
    check_k(k)?;
    match shape {
        GraphShape::Path { .. } => Ok(n / k),
        GraphShape::Cycle { .. } if n < k => Ok(0),
        GraphShape::Cycle { .. } => Ok(n.div_ceil(k)),
        _ => Err(Error::Unsupported(
            "closed-form minimum cover size exists only for paths and cycles".into(),
        )),
    }
}
