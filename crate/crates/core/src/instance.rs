//! Line-oriented instance files.
//!
//! ```text
//! # comment
//! k 3
//! n 6
//! edge 0 1
//! I: 0 3
//! J: 1 4
//! rule: tar
//! u: 3
//! ```
//!
//! Graph files use the same syntax with only `k` (optional), `n` and `edge`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{check_k, CoverSet, Graph};
use crate::reconfig::{parse_id, tokens, Rule};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub k: usize,
    pub graph: Graph,
    pub i: CoverSet,
    pub j: CoverSet,
    pub rule: Rule,
}

/// A bare graph, optionally with `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub k: Option<usize>,
    pub graph: Graph,
}

#[derive(Default)]
struct Fields {
    k: Option<usize>,
    n: Option<usize>,
    edges: Vec<(usize, usize)>,
    i: Option<CoverSet>,
    j: Option<CoverSet>,
    rule: Option<(usize, &'static str)>,
    u: Option<usize>,
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, col, msg: msg.into() }
}

fn scan(text: &str, allow_covers: bool) -> Result<Fields> {
    let mut f = Fields::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let toks = tokens(body);
        let Some(&(col, head)) = toks.first() else {
            continue;
        };
        let args = &toks[1..];
        let num = |(c, t): (usize, &str)| parse_id(t).ok_or_else(|| perr(line, c, format!("expected a non-negative integer, got `{t}`")));
        let exactly = |want: usize| -> Result<Vec<usize>> {
            if args.len() != want {
                let c = args.get(want).map_or(col + head.len(), |a| a.0);
                return Err(perr(line, c, format!("`{head}` takes {want} value(s)")));
            }
            args.iter().map(|&a| num(a)).collect()
        };
        let once = |set: bool| if set { Err(perr(line, col, format!("duplicate `{head}` line"))) } else { Ok(()) };
        match head {
            "k" => {
                once(f.k.is_some())?;
                f.k = Some(exactly(1)?[0]);
            }
            "n" => {
                once(f.n.is_some())?;
                f.n = Some(exactly(1)?[0]);
            }
            "edge" => {
                let e = exactly(2)?;
                f.edges.push((e[0], e[1]));
            }
            "I:" | "J:" if allow_covers => {
                let ids = args.iter().map(|&a| num(a)).collect::<Result<Vec<_>>>()?;
                if ids.len() != CoverSet::new(ids.iter().copied()).len() {
                    return Err(perr(line, col, format!("repeated vertex in `{head}`")));
                }
                let slot = if head == "I:" { &mut f.i } else { &mut f.j };
                once(slot.is_some())?;
                *slot = Some(CoverSet::new(ids));
            }
            "rule:" if allow_covers => {
                once(f.rule.is_some())?;
                let [(c, t)] = args else {
                    return Err(perr(line, col, "`rule:` takes one of ts, tj, tar"));
                };
                let r = match *t {
                    "ts" => "ts",
                    "tj" => "tj",
                    "tar" => "tar",
                    other => return Err(perr(line, *c, format!("unsupported rule `{other}`; expected ts, tj or tar"))),
                };
                f.rule = Some((line, r));
            }
            "u:" if allow_covers => {
                once(f.u.is_some())?;
                f.u = Some(exactly(1)?[0]);
            }
            other => return Err(perr(line, col, format!("unknown keyword `{other}`"))),
        }
    }
    Ok(f)
}

fn build_graph(f: &Fields) -> Result<Graph> {
    let n = f.n.ok_or_else(|| perr(1, 1, "missing `n` line"))?;
    Graph::from_edges(n, &f.edges)
}

impl GraphFile {
    pub fn parse(text: &str) -> Result<GraphFile> {
        let f = scan(text, false)?;
        if let Some(k) = f.k {
            check_k(k)?;
        }
        Ok(GraphFile { k: f.k, graph: build_graph(&f)? })
    }
}

impl Instance {
    /// Parse and validate: the graph must be simple, `k >= 2`, and both `I`
    /// and `J` must be k-path vertex covers.
    pub fn parse(text: &str) -> Result<Instance> {
        let f = scan(text, true)?;
        let k = f.k.ok_or_else(|| perr(1, 1, "missing `k` line"))?;
        check_k(k)?;
        let graph = build_graph(&f)?;
        let i = f.i.clone().ok_or_else(|| perr(1, 1, "missing `I:` line"))?;
        let j = f.j.clone().ok_or_else(|| perr(1, 1, "missing `J:` line"))?;
        let (rule_line, rule) = f.rule.ok_or_else(|| perr(1, 1, "missing `rule:` line"))?;
        let rule = match (rule, f.u) {
            ("ts", None) => Rule::Ts,
            ("tj", None) => Rule::Tj,
            ("tar", Some(cap)) => Rule::Tar { cap },
            ("tar", None) => return Err(perr(rule_line, 1, "rule `tar` needs a `u:` line")),
            (_, Some(_)) => return Err(perr(rule_line, 1, "`u:` is only allowed with rule `tar`")),
            _ => unreachable!(),
        };
        graph.require_cover(&i, k, "I")?;
        graph.require_cover(&j, k, "J")?;
        Ok(Instance { k, graph, i, j, rule })
    }
}

fn write_graph(f: &mut fmt::Formatter<'_>, g: &Graph) -> fmt::Result {
    writeln!(f, "n {}", g.n())?;
    for (u, v) in g.edges() {
        writeln!(f, "edge {u} {v}")?;
    }
    Ok(())
}

fn write_set(f: &mut fmt::Formatter<'_>, label: &str, c: &CoverSet) -> fmt::Result {
    write!(f, "{label}")?;
    for v in c.iter() {
        write!(f, " {v}")?;
    }
    writeln!(f)
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k {}", self.k)?;
        write_graph(f, &self.graph)?;
        write_set(f, "I:", &self.i)?;
        write_set(f, "J:", &self.j)?;
        match self.rule {
            Rule::Ts => writeln!(f, "rule: ts"),
            Rule::Tj => writeln!(f, "rule: tj"),
            Rule::Tar { cap } => writeln!(f, "rule: tar\nu: {cap}"),
        }
    }
}

impl fmt::Display for GraphFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(k) = self.k {
            writeln!(f, "k {k}")?;
        }
        write_graph(f, &self.graph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const C6: &str = "# frozen cycle\nk 3\nn 6\nedge 0 1\nedge 1 2\nedge 2 3\nedge 3 4\nedge 4 5\nedge 5 0\nI: 0 3\nJ: 1 4\nrule: tj\n";

    #[test]
    fn parses_and_round_trips() {
        let inst = Instance::parse(C6).unwrap();
        assert_eq!(inst.graph, Graph::cycle(6).unwrap());
        assert_eq!(inst.rule, Rule::Tj);
        assert_eq!(Instance::parse(&inst.to_string()).unwrap(), inst);
        let tar = Instance { rule: Rule::Tar { cap: 4 }, ..inst };
        assert_eq!(Instance::parse(&tar.to_string()).unwrap(), tar);
    }

    #[test]
    fn reports_uncovered_path() {
        let text = C6.replace("I: 0 3", "I: 3");
        match Instance::parse(&text) {
            Err(Error::NotACover { which, witness }) => {
                assert_eq!(which, "I");
                assert_eq!(witness, vec![0, 1, 2]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_errors_have_positions() {
        let text = C6.replace("rule: tj", "rule: tar");
        assert!(matches!(Instance::parse(&text), Err(Error::Parse { line: 12, .. })));
        let text = C6.replace("edge 2 3", "edge 2 x");
        assert_eq!(
            Instance::parse(&text).unwrap_err(),
            Error::Parse { line: 6, col: 8, msg: "expected a non-negative integer, got `x`".into() }
        );
        let text = C6.replace("rule: tj", "rule: slide");
        assert!(matches!(Instance::parse(&text), Err(Error::Parse { line: 12, col: 7, .. })));
        let text = C6.replace("k 3", "kk 3");
        assert!(matches!(Instance::parse(&text), Err(Error::Parse { line: 2, col: 1, .. })));
        assert!(matches!(Instance::parse(&C6.replace("edge 5 0", "edge 5 9")), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn graph_files() {
        let g = GraphFile::parse("n 3\nedge 0 1\nedge 1 2\n").unwrap();
        assert_eq!(g.k, None);
        assert_eq!(GraphFile::parse(&g.to_string()).unwrap(), g);
        assert!(GraphFile::parse("n 3\nI: 0\n").is_err());
    }
}
