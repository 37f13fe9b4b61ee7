//! Generators for the hardness constructions: the pendant-path transform
//! from vertex cover, and the NCL AND/OR gadgets with a checker that
//! contracts a gadget's reconfiguration graph by port signature.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{check_k, CoverSet, Graph};
use crate::oracle::{OracleConfig, ReconfGraph};
use crate::reconfig::Rule;

/// `G'` built from `G` by hanging a path of `⌊(k-1)/2⌋` new vertices off
/// every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantTransform {
    pub base: Graph,
    pub k: usize,
    pub result: Graph,
    /// New path vertices for each base vertex, nearest first.
    pub pendant_map: Vec<Vec<usize>>,
}

/// Vertex `x` keeps its id; its pendant path uses ids
/// `n + x*m .. n + (x+1)*m` with `m = ⌊(k-1)/2⌋`.
pub fn pendant_transform(g: &Graph, k: usize) -> Result<PendantTransform> {
    check_k(k)?;
    let n = g.n();
    let m = (k - 1) / 2;
    let mut edges = g.edges().to_vec();
    let mut pendant_map = Vec::with_capacity(n);
    for x in 0..n {
        let path: Vec<usize> = (0..m).map(|t| n + x * m + t).collect();
        let mut prev = x;
        for &p in &path {
            edges.push((prev, p));
            prev = p;
        }
        pendant_map.push(path);
    }
    Ok(PendantTransform {
        base: g.clone(),
        k,
        result: Graph::from_edges(n * (1 + m), &edges)?,
        pendant_map,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetKind {
    And,
    Or,
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GadgetKind::And => "AND",
            GadgetKind::Or => "OR",
        })
    }
}

/// A connecting part: a path on `2k - 2` vertices whose two middle vertices
/// encode the direction of the NCL edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Port {
    /// Path order.
    pub vertices: Vec<usize>,
    /// Center next to the main part; a token here means "inward".
    pub inward: usize,
    /// The other center; a token here means "outward".
    pub outward: usize,
    /// Main-part vertex the inward center is joined to.
    pub attach: usize,
    pub weight: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NclGadget {
    pub kind: GadgetKind,
    pub k: usize,
    pub graph: Graph,
    pub main: Vec<usize>,
    pub ports: [Port; 3],
}

/// AND: main path `0..k`, ports of weight 1, 1 on its last vertex and the
/// weight-2 port on vertex 0. OR: main cycle `0..=k`, ports on 0, 1, 2.
pub fn build_gadget(kind: GadgetKind, k: usize) -> Result<NclGadget> {
    if k < 3 {
        return Err(Error::InvalidK(k));
    }
    let (main_len, mut edges, attach, weights) = match kind {
        GadgetKind::And => {
            let edges: Vec<_> = (1..k).map(|v| (v - 1, v)).collect();
            (k, edges, [k - 1, k - 1, 0], [1, 1, 2])
        }
        GadgetKind::Or => {
            let mut edges: Vec<_> = (1..=k).map(|v| (v - 1, v)).collect();
            edges.push((0, k));
            (k + 1, edges, [0, 1, 2], [2, 2, 2])
        }
    };
    let len = 2 * k - 2;
    let ports: Vec<Port> = (0..3)
        .map(|q| {
            let base = main_len + q * len;
            let vertices: Vec<usize> = (base..base + len).collect();
            for w in vertices.windows(2) {
                edges.push((w[0], w[1]));
            }
            let inward = base + k - 2;
            edges.push((attach[q], inward));
            Port { vertices, inward, outward: base + k - 1, attach: attach[q], weight: weights[q] }
        })
        .collect();
    let graph = Graph::from_edges(main_len + 3 * len, &edges)?;
    Ok(NclGadget {
        kind,
        k,
        graph,
        main: (0..main_len).collect(),
        ports: ports.try_into().expect("three ports"),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PortDir {
    Inward,
    Outward,
}

/// Direction of each of the three NCL edges at the gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation(pub [PortDir; 3]);

fn weights(kind: GadgetKind) -> [u8; 3] {
    match kind {
        GadgetKind::And => [1, 1, 2],
        GadgetKind::Or => [2, 2, 2],
    }
}

impl Orientation {
    /// NCL constraint: total inward weight at least 2.
    pub fn is_valid(&self, kind: GadgetKind) -> bool {
        let w: u8 = self
            .0
            .iter()
            .zip(weights(kind))
            .filter(|(d, _)| **d == PortDir::Inward)
            .map(|(_, w)| w)
            .sum();
        w >= 2
    }
}

/// Valid orientations out of all eight, in lexicographic order.
pub fn valid_orientations(kind: GadgetKind) -> Vec<Orientation> {
    let dir = |b: u32| if b == 0 { PortDir::Inward } else { PortDir::Outward };
    (0..8u32)
        .map(|m| Orientation([dir(m & 1), dir(m >> 1 & 1), dir(m >> 2 & 1)]))
        .filter(|o| o.is_valid(kind))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Valid orientations joined when they differ in exactly one port.
pub fn orientation_graph(kind: GadgetKind) -> (Vec<Orientation>, BTreeSet<(usize, usize)>) {
    let nodes = valid_orientations(kind);
    let mut edges = BTreeSet::new();
    for a in 0..nodes.len() {
        for b in a + 1..nodes.len() {
            let diff = (0..3).filter(|&q| nodes[a].0[q] != nodes[b].0[q]).count();
            if diff == 1 {
                edges.insert((a, b));
            }
        }
    }
    (nodes, edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PortState {
    Inward,
    Outward,
    /// Both centers or neither hold a token.
    Other,
}

pub type Signature = [PortState; 3];

impl NclGadget {
    pub fn signature(&self, c: &CoverSet) -> Signature {
        self.ports.clone().map(|p| match (c.contains(p.inward), c.contains(p.outward)) {
            (true, false) => PortState::Inward,
            (false, true) => PortState::Outward,
            _ => PortState::Other,
        })
    }
}

/// The gadget's reconfiguration graph contracted by port signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetQuotient {
    pub nodes: Vec<Signature>,
    pub edges: BTreeSet<(usize, usize)>,
    pub class_sizes: Vec<usize>,
    /// Whether each signature class is connected on its own.
    pub class_connected: Vec<bool>,
    pub states: usize,
}

impl GadgetQuotient {
    pub fn all_classes_connected(&self) -> bool {
        self.class_connected.iter().all(|&c| c)
    }

    /// Signatures as orientations, when no port is in the `Other` state.
    pub fn orientations(&self) -> Option<Vec<Orientation>> {
        self.nodes
            .iter()
            .map(|sig| {
                let mut o = [PortDir::Inward; 3];
                for q in 0..3 {
                    o[q] = match sig[q] {
                        PortState::Inward => PortDir::Inward,
                        PortState::Outward => PortDir::Outward,
                        PortState::Other => return None,
                    };
                }
                Some(Orientation(o))
            })
            .collect()
    }
}

/// Build the TS or TJ reconfiguration graph over the gadget's k-PVCs with
/// exactly `token_budget` tokens and contract it by port signature.
pub fn gadget_reconf_graph(
    gadget: &NclGadget,
    token_budget: usize,
    rule: Rule,
    cfg: &OracleConfig,
) -> Result<GadgetQuotient> {
    if matches!(rule, Rule::Tar { .. }) {
        return Err(Error::Unsupported("gadget quotients are built for TS and TJ".into()));
    }
    let rg = ReconfGraph::build(&gadget.graph, gadget.k, rule, token_budget..=token_budget, cfg)?;
    let sigs: Vec<Signature> = (0..rg.len()).map(|i| gadget.signature(&rg.state(i))).collect();
    let index: BTreeMap<Signature, usize> = sigs
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let class: Vec<usize> = sigs.iter().map(|s| index[s]).collect();
    let mut edges = BTreeSet::new();
    for a in 0..rg.len() {
        for b in rg.neighbors(a) {
            let (x, y) = (class[a], class[b]);
            if x < y {
                edges.insert((x, y));
            }
        }
    }
    let mut class_sizes = vec![0; index.len()];
    for &c in &class {
        class_sizes[c] += 1;
    }
    // Flood each class using only edges inside it.
    let mut seen = vec![false; rg.len()];
    let mut components = vec![0usize; index.len()];
    for s in 0..rg.len() {
        if seen[s] {
            continue;
        }
        components[class[s]] += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for w in rg.neighbors(u) {
                if !seen[w] && class[w] == class[u] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    Ok(GadgetQuotient {
        nodes: index.keys().copied().collect(),
        edges,
        class_sizes,
        class_connected: components.iter().map(|&c| c == 1).collect(),
        states: rg.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate_covers, oracle_min_cover_size};

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn pendant_examples() {
        let t = pendant_transform(&triangle(), 3).unwrap();
        assert_eq!(t.result.n(), 6);
        assert_eq!(t.pendant_map, vec![vec![3], vec![4], vec![5]]);
        assert!(t.result.is_kpvc(&CoverSet::new([0, 1]), 3));
        let same = pendant_transform(&triangle(), 2).unwrap();
        assert_eq!(same.result, triangle());
        let five = pendant_transform(&triangle(), 5).unwrap();
        assert_eq!(five.result.n(), 9);
        assert_eq!(five.pendant_map[1], vec![5, 6]);
    }

    #[test]
    fn gadget_sizes() {
        let and = build_gadget(GadgetKind::And, 3).unwrap();
        assert_eq!(and.graph.n(), 15);
        assert_eq!(and.ports[2].weight, 2);
        let or = build_gadget(GadgetKind::Or, 3).unwrap();
        assert_eq!(or.graph.n(), 16);
        assert_eq!(build_gadget(GadgetKind::And, 4).unwrap().graph.n(), 4 + 3 * 6);
        assert!(build_gadget(GadgetKind::Or, 2).is_err());
    }

    #[test]
    fn orientations() {
        use PortDir::*;
        assert_eq!(valid_orientations(GadgetKind::And).len(), 5);
        assert_eq!(valid_orientations(GadgetKind::Or).len(), 7);
        assert!(!Orientation([Inward, Outward, Outward]).is_valid(GadgetKind::And));
        assert!(Orientation([Inward, Inward, Inward]).is_valid(GadgetKind::Or));
        let (nodes, edges) = orientation_graph(GadgetKind::And);
        assert_eq!(nodes.len(), 5);
        assert_eq!(edges.len(), 5);
    }

    #[test]
    fn or_gadget_cover_count() {
        let or = build_gadget(GadgetKind::Or, 3).unwrap();
        let cfg = OracleConfig::default();
        assert_eq!(enumerate_covers(&or.graph, 3, 0, 5, &cfg).unwrap().len(), 18);
        assert_eq!(oracle_min_cover_size(&or.graph, 3, &cfg).unwrap(), 5);
    }

    #[test]
    fn and_quotient() {
        let and = build_gadget(GadgetKind::And, 3).unwrap();
        let q = gadget_reconf_graph(&and, 4, Rule::Tj, &OracleConfig::default()).unwrap();
        assert_eq!(q.nodes.len(), 5);
        assert!(q.all_classes_connected());
        let (nodes, edges) = orientation_graph(GadgetKind::And);
        assert_eq!(q.orientations().unwrap(), nodes);
        assert_eq!(q.edges, edges);
    }
}
