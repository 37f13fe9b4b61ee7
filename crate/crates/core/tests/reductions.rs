mod common;

use kpvcr::oracle::{enumerate_covers, oracle_min_cover_size, OracleConfig};
use kpvcr::{
    build_gadget, gadget_reconf_graph, orientation_graph, pendant_transform, GadgetKind, Rule,
};

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

#[test]
fn gadgets_match_orientation_graphs() {
    for k in [3, 4] {
        for (kind, budget) in [(GadgetKind::And, 4), (GadgetKind::Or, 5)] {
            let g = build_gadget(kind, k).unwrap();
            assert_eq!(oracle_min_cover_size(&g.graph, k, &cfg()).unwrap(), budget);
            let (nodes, edges) = orientation_graph(kind);
            let tj = gadget_reconf_graph(&g, budget, Rule::Tj, &cfg()).unwrap();
            let ts = gadget_reconf_graph(&g, budget, Rule::Ts, &cfg()).unwrap();
            for q in [&tj, &ts] {
                assert_eq!(q.orientations().unwrap(), nodes, "{kind} k={k}");
                assert!(q.all_classes_connected());
            }
            assert_eq!(tj.edges, edges);
            assert!(ts.edges.is_subset(&tj.edges));
        }
    }
}

#[test]
fn gadget_state_counts() {
    let or = build_gadget(GadgetKind::Or, 3).unwrap();
    assert_eq!(enumerate_covers(&or.graph, 3, 0, 5, &cfg()).unwrap().len(), 18);
    let and = build_gadget(GadgetKind::And, 3).unwrap();
    assert_eq!(gadget_reconf_graph(&and, 4, Rule::Tj, &cfg()).unwrap().states, 7);
}

#[test]
fn pendant_preserves_minimum_covers() {
    for n in 2..=7 {
        for g in common::connected_graphs(n) {
            let t = pendant_transform(&g, 3).unwrap();
            let vc = oracle_min_cover_size(&g, 2, &cfg()).unwrap();
            let minimum_vcs = enumerate_covers(&g, 2, vc, vc, &cfg()).unwrap();
            let minimum_pvcs = enumerate_covers(&t.result, 3, vc, vc, &cfg()).unwrap();
            assert_eq!(oracle_min_cover_size(&t.result, 3, &cfg()).unwrap(), vc);
            // Same family in both directions.
            assert_eq!(minimum_vcs, minimum_pvcs, "{g:?}");
        }
    }
}
