//! Instance families shared by the integration tests and the acceptance run.
#![allow(dead_code)]

use std::collections::BTreeSet;

use kpvcr::Graph;
use rand::Rng;

/// Labeled tree decoded from a Prüfer sequence over `0..seq.len() + 2`.
pub fn tree_from_prufer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &v in seq {
        let leaf = leaves.pop_first().unwrap();
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    match n {
        1 => Graph::path(1).unwrap(),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            tree_from_prufer(&seq)
        }
    }
}

/// Adjacency rows as bitmasks.
type Rows = Vec<u32>;

fn canonical(rows: &Rows) -> Vec<u32> {
    let n = rows.len();
    let deg: Vec<u32> = rows.iter().map(|r| r.count_ones()).collect();
    // Only orderings that sort vertices by degree are tried.
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by_key(|&v| deg[v]);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &verts {
        match classes.last_mut() {
            Some(c) if deg[c[0]] == deg[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best: Option<Vec<u32>> = None;
    let mut order = Vec::with_capacity(n);
    permute_classes(&classes, 0, &mut order, rows, &mut best);
    best.unwrap()
}

fn permute_classes(
    classes: &[Vec<usize>],
    c: usize,
    order: &mut Vec<usize>,
    rows: &Rows,
    best: &mut Option<Vec<u32>>,
) {
    if c == classes.len() {
        let n = order.len();
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let code: Vec<u32> = order
            .iter()
            .map(|&v| (0..n).filter(|&w| rows[v] >> w & 1 == 1).fold(0, |m, w| m | 1 << pos[w]))
            .collect();
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    let mut class = classes[c].clone();
    let len = class.len();
    heap_permutations(&mut class, len, &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        permute_classes(classes, c + 1, order, rows, best);
        order.truncate(len);
    });
}

fn heap_permutations(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        f(items);
        return;
    }
    for i in 0..k {
        heap_permutations(items, k - 1, f);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        items.swap(j, k - 1);
    }
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, built by extending every graph on `n - 1` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let mut level: BTreeSet<Vec<u32>> = BTreeSet::from([vec![0u32]]);
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for rows in &level {
            for nbrs in 0u32..(1 << (m - 1)) {
                let mut r: Rows = rows.clone();
                for (v, row) in r.iter_mut().enumerate() {
                    if nbrs >> v & 1 == 1 {
                        *row |= 1 << (m - 1);
                    }
                }
                r.push(nbrs);
                next.insert(canonical(&r));
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|rows| {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |w| (u, w)))
                .filter(|&(u, w)| rows[u] >> w & 1 == 1)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .filter(|g| g.is_connected())
        .collect()
}
