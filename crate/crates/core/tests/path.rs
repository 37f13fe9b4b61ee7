use kpvcr::oracle::{enumerate_covers, OracleConfig, ReconfGraph};
use kpvcr::{push, solve_path_tar, solve_path_tj, solve_path_ts, verify, CoverSet, Graph, Rule, SolveOutcome};

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

#[test]
fn tj_and_ts_lengths_match_oracle() {
    for n in 2..=10 {
        let g = Graph::path(n).unwrap();
        for k in 2..=4 {
            for s in n / k..=n {
                let tj = ReconfGraph::for_rule(&g, k, Rule::Tj, s, &cfg()).unwrap();
                let ts = ReconfGraph::for_rule(&g, k, Rule::Ts, s, &cfg()).unwrap();
                for a in 0..tj.len() {
                    let dj = tj.distances_from(a);
                    let ds = ts.distances_from(a);
                    let i = tj.state(a);
                    for b in 0..tj.len() {
                        let j = tj.state(b);
                        let out = solve_path_tj(&g, k, &i, &j).unwrap();
                        let seq = out.sequence().expect("equal sizes are always reachable");
                        verify(&g, k, Rule::Tj, seq, &j).unwrap();
                        assert_eq!(seq.len(), i.symmetric_difference_len(&j) / 2);
                        assert_eq!(Some(seq.len() as u32), dj[b], "TJ n={n} k={k} {i} -> {j}");

                        let out = solve_path_ts(&g, k, &i, &j).unwrap();
                        let seq = out.sequence().unwrap();
                        verify(&g, k, Rule::Ts, seq, &j).unwrap();
                        let rank: usize = i.iter().zip(j.iter()).map(|(x, y)| x.abs_diff(y)).sum();
                        assert_eq!(seq.len(), rank);
                        assert_eq!(Some(seq.len() as u32), ds[b], "TS n={n} k={k} {i} -> {j}");
                    }
                }
            }
        }
    }
}

#[test]
fn removable_predicate_matches_cover_check() {
    for n in 1..=12 {
        let g = Graph::path(n).unwrap();
        for k in 2..=4 {
            for c in enumerate_covers(&g, k, 1, n, &cfg()).unwrap() {
                let expect = c.iter().filter(|&v| g.is_kpvc(&c.without(v), k)).min();
                assert_eq!(kpvcr::path::removable_token_for(&g, k, &c).unwrap(), expect, "n={n} k={k} {c}");
            }
        }
    }
}

#[test]
fn tar_matches_oracle() {
    for n in 2..=8 {
        let g = Graph::path(n).unwrap();
        for k in 2..=4 {
            let psi = n / k;
            for u in psi..=n {
                let rg = ReconfGraph::for_rule(&g, k, Rule::Tar { cap: u }, 0, &cfg()).unwrap();
                let all = enumerate_covers(&g, k, 0, n, &cfg()).unwrap();
                let comp = rg.components();
                for i in &all {
                    for j in &all {
                        let out = solve_path_tar(&g, k, i, j, u).unwrap();
                        let truth = match (rg.index_of(i), rg.index_of(j)) {
                            (Some(a), Some(b)) => comp[a] == comp[b],
                            _ => false,
                        };
                        assert_eq!(out.is_yes(), truth, "n={n} k={k} u={u} {i} -> {j}: {out:?}");
                        if let SolveOutcome::Yes(seq) = out {
                            verify(&g, k, Rule::Tar { cap: u }, &seq, j).unwrap();
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn size_mismatch() {
    let g = Graph::path(6).unwrap();
    let i = CoverSet::new([1, 4]);
    let j = CoverSet::new([0, 2, 4]);
    assert!(!solve_path_tj(&g, 3, &i, &j).unwrap().is_yes());
    assert!(!solve_path_ts(&g, 3, &i, &j).unwrap().is_yes());
}

#[test]
fn push_succeeds_exactly_when_guarded() {
    for n in 2..=10 {
        let g = Graph::path(n).unwrap();
        for k in 2..=4 {
            for c in enumerate_covers(&g, k, 0, n, &cfg()).unwrap() {
                let pos = c.as_slice();
                for &i in pos {
                    let behind = pos.iter().rev().find(|&&p| p < i).map_or(0, |&p| p + 1);
                    for j in i + 1..=i + k {
                        let ahead = pos.iter().filter(|&&p| p >= i).count();
                        let expect = j < n && j - behind < k && ahead <= n - j;
                        match push(&g, k, &c, i, j) {
                            Ok(seq) => {
                                assert!(expect, "n={n} k={k} {pos:?} {i}->{j}");
                                verify(&g, k, Rule::Ts, &seq, &seq.end()).unwrap();
                                assert!(seq.end().contains(j));
                            }
                            Err(_) => assert!(!expect, "n={n} k={k} {pos:?} {i}->{j}"),
                        }
                    }
                }
            }
        }
    }
}
