use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use kpvcr::oracle::{OracleConfig, BUDGET_ENV};
use kpvcr::{
    build_gadget, lemma11_family, pendant_transform, solve, solve_by_oracle, solve_cycle, solve_path_tj,
    solve_path_ts, verify, CoverSet, GadgetKind, Graph, GraphFile, Instance, ReconfGraph, ReconfSequence, Rule,
    SolveOutcome,
};

#[derive(Parser)]
#[command(name = "kpvcr", version, about = "Reconfiguration of k-path vertex covers")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide an instance and print a sequence or the reason it is unreachable.
    Solve {
        instance: PathBuf,
        /// Use the exhaustive oracle instead of the polynomial solvers.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        oracle_opts: OracleOpts,
    },
    /// Check a sequence file against an instance. `-` reads the sequence from stdin.
    Verify { instance: PathBuf, sequence: PathBuf },
    /// Answer reachability by exhaustive search of the reconfiguration graph.
    Oracle {
        instance: PathBuf,
        /// Also print a shortest sequence.
        #[arg(long)]
        shortest: bool,
        /// Write the reconfiguration graph to this file.
        #[arg(long)]
        export: Option<PathBuf>,
        #[command(flatten)]
        oracle_opts: OracleOpts,
    },
    /// Emit a generated instance or graph file.
    Generate {
        kind: GenKind,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Input graph for `pendant`; stdin when absent.
        input: Option<PathBuf>,
    },
    /// Time the path and cycle solvers on spread-token instances.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
}

#[derive(Args)]
struct OracleOpts {
    /// Worker threads for the oracle; 1 builds sequentially.
    #[arg(long)]
    jobs: Option<usize>,
    /// Maximum number of candidate states.
    #[arg(long, env = BUDGET_ENV)]
    budget: Option<usize>,
}

impl OracleOpts {
    fn config(&self) -> Result<OracleConfig> {
        let mut cfg = OracleConfig::default();
        if let Some(b) = self.budget {
            cfg.budget = b;
        }
        match self.jobs {
            Some(0) => anyhow::bail!("--jobs must be at least 1"),
            Some(1) => cfg = cfg.sequential(),
            #[cfg(feature = "parallel")]
            Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?,
            _ => {}
        }
        Ok(cfg)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Lemma11,
    GadgetAnd,
    GadgetOr,
    Pendant,
}

/// Exit status for a failure; the process exits 0 only when the command
/// decided its question.
fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<kpvcr::Error>() {
        Some(kpvcr::Error::Unsupported(_)) => 2,
        Some(kpvcr::Error::BudgetExceeded { .. }) => 3,
        Some(kpvcr::Error::Verify(_)) => 4,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        // A reader such as `head` closed the pipe early.
        Err(e) if e.downcast_ref::<io::Error>().is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            match e.downcast_ref::<kpvcr::Error>() {
                Some(kpvcr::Error::Unsupported(msg)) => eprintln!("unsupported: {msg}; use --oracle"),
                Some(err @ kpvcr::Error::Verify(_)) => eprintln!("error: {err}"),
                _ => eprintln!("error: {e:#}"),
            }
            ExitCode::from(exit_code(&e))
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_instance(path: &Path) -> Result<Instance> {
    let text = read_input(path)?;
    Instance::parse(&text).map_err(|e| anyhow::Error::new(e).context(path.display().to_string()))
}

fn run(cmd: Cmd) -> Result<()> {
    let mut out = io::stdout().lock();
    match cmd {
        Cmd::Solve { instance, oracle, oracle_opts } => {
            let inst = load_instance(&instance)?;
            let outcome = if oracle { solve_by_oracle(&inst, &oracle_opts.config()?)? } else { solve(&inst)? };
            match outcome {
                SolveOutcome::Yes(seq) if seq.is_empty() => write!(out, "YES trivial\n{seq}")?,
                SolveOutcome::Yes(seq) => write!(out, "YES\n{seq}")?,
                SolveOutcome::No(reason) => writeln!(out, "NO {reason}")?,
            }
        }
        Cmd::Verify { instance, sequence } => {
            let inst = load_instance(&instance)?;
            let text = read_input(&sequence)?;
            // Accept `solve` output directly by skipping its verdict line.
            let body = match text.split_once('\n') {
                Some((first, rest)) if first.starts_with("YES") => rest,
                _ => &text,
            };
            let seq = ReconfSequence::parse(body).with_context(|| sequence.display().to_string())?;
            if seq.start != inst.i {
                anyhow::bail!("sequence starts at {:?}, instance I is {:?}", seq.start.as_slice(), inst.i.as_slice());
            }
            verify(&inst.graph, inst.k, inst.rule, &seq, &inst.j).map_err(kpvcr::Error::from)?;
            writeln!(out, "OK {} steps", seq.len())?;
        }
        Cmd::Oracle { instance, shortest, export, oracle_opts } => {
            let inst = load_instance(&instance)?;
            let cfg = oracle_opts.config()?;
            match solve_by_oracle(&inst, &cfg)? {
                SolveOutcome::Yes(seq) => {
                    writeln!(out, "reachable, shortest={}", seq.len())?;
                    if shortest {
                        write!(out, "{seq}")?;
                    }
                }
                SolveOutcome::No(reason) => writeln!(out, "unreachable ({reason})")?,
            }
            if let Some(path) = export {
                let rg = ReconfGraph::for_rule(&inst.graph, inst.k, inst.rule, inst.i.len(), &cfg)?;
                let file = fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                rg.export(io::BufWriter::new(file))?;
            }
        }
        Cmd::Generate { kind, k, input } => match kind {
            GenKind::Lemma11 => write!(out, "{}", lemma11_family(k)?)?,
            GenKind::GadgetAnd | GenKind::GadgetOr => {
                let kind = if matches!(kind, GenKind::GadgetAnd) { GadgetKind::And } else { GadgetKind::Or };
                let g = build_gadget(kind, k)?;
                writeln!(out, "# {kind} gadget")?;
                for (q, p) in g.ports.iter().enumerate() {
                    writeln!(out, "# port {q}: weight {}, inward {}, outward {}", p.weight, p.inward, p.outward)?;
                }
                write!(out, "{}", GraphFile { k: Some(k), graph: g.graph })?;
            }
            GenKind::Pendant => {
                let text = read_input(input.as_deref().unwrap_or(Path::new("-")))?;
                let base = GraphFile::parse(&text)?;
                let t = pendant_transform(&base.graph, k)?;
                write!(out, "{}", GraphFile { k: Some(k), graph: t.result })?;
            }
        },
        Cmd::Bench { sizes, k } => bench(&mut out, &sizes, k)?,
    }
    Ok(())
}

fn bench(out: &mut impl Write, sizes: &[usize], k: usize) -> Result<()> {
    writeln!(out, "{:<10} {:>8} {:>12} {:>8}", "solver", "n", "micros", "steps")?;
    for &n in sizes {
        let s = n.div_ceil(k) + 1;
        let (i, j) = (CoverSet::spread(n, s, 0), CoverSet::spread(n, s, 1));
        let path = Graph::path(n)?;
        let cycle = Graph::cycle(n)?;
        type Solver<'a> = Box<dyn Fn() -> kpvcr::Result<SolveOutcome> + 'a>;
        let runs: [(&str, Solver); 4] = [
            ("path-tj", Box::new(|| solve_path_tj(&path, k, &i, &j))),
            ("path-ts", Box::new(|| solve_path_ts(&path, k, &i, &j))),
            ("cycle-tj", Box::new(|| solve_cycle(&cycle, k, &i, &j, Rule::Tj))),
            ("cycle-ts", Box::new(|| solve_cycle(&cycle, k, &i, &j, Rule::Ts))),
        ];
        for (name, run) in runs {
            let t = Instant::now();
            let outcome = run()?;
            let micros = t.elapsed().as_micros();
            let steps = outcome.sequence().map_or(0, |s| s.len());
            writeln!(out, "{name:<10} {n:>8} {micros:>12} {steps:>8}")?;
        }
    }
    Ok(())
}
