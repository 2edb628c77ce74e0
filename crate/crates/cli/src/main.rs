use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hskernel::graph::{incidence_graph, local_complete_graph, Side, SideTags};
use hskernel::harness::{self, Family, Method, SweepFamily, VerifyConfig};
use hskernel::hypergraph::{Hypergraph, Instance, Problem, Vertex};
use hskernel::kernels::{duality_lower_bound, KernelOutcome};
use hskernel::oracles;
use hskernel::planar::kernelize_planar_vc_detailed;
use hskernel::planarity::planarity;
use hskernel::scalar::{format_rational, parse_rational};

/// Kernelization and exact solvers for vertex cover on 3-uniform hypergraphs.
#[derive(Parser)]
#[command(name = "hskernel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural summary: uniformity, degrees, planarity, fractional cover.
    Analyze { file: PathBuf },
    /// Solve a problem exactly.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum)]
        problem: SolveProblem,
    },
    /// Run one kernelization.
    Kernelize {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Degree bound for `bd`; defaults to the maximum degree.
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_enum, default_value = "vc")]
        problem: ProblemArg,
    },
    /// Generate a seeded instance.
    Generate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        seed: u64,
        /// Write the instance file here instead of embedding it in the output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded sweep comparing kernel decisions with the oracles.
    Verify {
        #[arg(long, value_enum)]
        family: SweepArg,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        /// Leave timing fields out so reruns are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
    /// Lower bound on a kernel constant from the dual kernel constant.
    Bounds {
        #[arg(long)]
        alpha_d: String,
        #[arg(long)]
        alpha: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveProblem {
    Vc,
    Is,
    Ds,
    Im,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Qr,
    Bd,
    Planar,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    Vc,
    Is,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Regular,
    Bd,
    Planar,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepArg {
    Regular,
    Bd,
    Planar,
    Mixed,
}

/// Set when a verification ran but found a disagreement.
struct Failed(Value);

fn read(path: &Path) -> Result<Hypergraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    harness::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn labels(vs: impl IntoIterator<Item = Vertex>) -> Vec<usize> {
    vs.into_iter().map(|v| v + 1).collect()
}

fn edge_list(h: &Hypergraph) -> Vec<Vec<usize>> {
    h.edges().iter().map(|e| labels(e.iter().copied())).collect()
}

/// Vertices of derived graphs print as `v<i>` for hypergraph vertices and
/// `e<j>` for the j-th edge, both 1-based.
fn node(tags: &SideTags, v: Vertex) -> String {
    match tags.side(v) {
        Side::V2 => format!("e{}", tags.edge_of[&v] + 1),
        _ => format!("v{}", v + 1),
    }
}

fn analyze(h: &Hypergraph) -> Value {
    let report = h.validate();
    let verdict = planarity(&incidence_graph(h).graph);
    let fractional = oracles::fractional_cover(h);
    let qr = oracles::quasi_regular_multiplicities(h).map(|m| {
        json!({
            "r": m.r.to_string(),
            "multiplicities": m.per_edge.iter().map(|k| k.to_string()).collect::<Vec<_>>(),
        })
    });
    json!({
        "n": h.n(),
        "m": h.m(),
        "uniform": report.uniform,
        "simple": report.simple,
        "isolated": labels(report.isolated.iter().copied()),
        "max_degree": report.max_degree,
        "planar": verdict.is_planar(),
        "fractional_cover": format_rational(&fractional),
        "quasi_regular": qr,
    })
}

fn solve(h: &Hypergraph, problem: SolveProblem) -> Result<Value> {
    Ok(match problem {
        SolveProblem::Vc => {
            let s = oracles::min_hitting_set(h)?;
            json!({ "problem": "vertex-cover", "size": s.size, "witness": labels(s.witness) })
        }
        SolveProblem::Is => {
            let s = oracles::max_strong_independent_set(h)?;
            json!({ "problem": "independent-set", "size": s.size, "witness": labels(s.witness) })
        }
        SolveProblem::Ds => {
            let lc = local_complete_graph(h);
            let s = oracles::min_dominating_set(&lc.graph, &[])?;
            let witness: Vec<String> = s.witness.iter().map(|&v| node(&lc.tags, v)).collect();
            json!({ "problem": "dominating-set", "size": s.size, "witness": witness })
        }
        SolveProblem::Im => {
            let lc = local_complete_graph(h);
            let s = oracles::max_induced_matching(&lc.graph)?;
            let witness: Vec<[String; 2]> =
                s.witness.iter().map(|&(a, b)| [node(&lc.tags, a), node(&lc.tags, b)]).collect();
            json!({ "problem": "induced-matching", "size": s.size, "witness": witness })
        }
    })
}

fn kernelize(h: Hypergraph, k: usize, method: MethodArg, d: Option<usize>, problem: ProblemArg) -> Result<Value> {
    let problem = match problem {
        ProblemArg::Vc => Problem::VertexCover,
        ProblemArg::Is => Problem::IndependentSet,
    };
    let inst = Instance::new(h, k, problem)?;
    let method = match method {
        MethodArg::Qr => Method::QuasiRegular,
        MethodArg::Bd => Method::BoundedDegree { d: d.unwrap_or_else(|| inst.hypergraph.max_degree()) },
        MethodArg::Planar => Method::Planar,
    };
    let mut out = json!({ "method": method.to_string(), "problem": problem, "k": k });
    if let Method::BoundedDegree { d } = method {
        out["d"] = json!(d);
    }
    let outcome = if method == Method::Planar {
        let detail = kernelize_planar_vc_detailed(&inst)?;
        out["reduction"] = json!({
            "steps": detail.trace.len(),
            "graph_vertices_before": detail.initial.vertex_count(),
            "graph_vertices_after": detail.reduced.vertex_count(),
            "dropped": detail.reconstruction.dropped,
        });
        detail.outcome
    } else {
        harness::kernelize(&inst, method)?
    };
    match outcome {
        KernelOutcome::Decided { answer, reason } => {
            out["outcome"] = json!("decided");
            out["answer"] = json!(answer);
            out["reason"] = json!(reason);
        }
        KernelOutcome::Kernel { instance, forced, stats } => {
            out["outcome"] = json!("kernel");
            out["kernel"] = json!({
                "n": stats.n,
                "m": stats.m,
                "k": instance.k,
                "vertices": labels(instance.hypergraph.vertices().iter().copied()),
                "edges": edge_list(&instance.hypergraph),
                "forced": labels(forced),
                "bound": stats.bound,
                "bound_satisfied": stats.within_bound(),
            });
        }
    }
    Ok(out)
}

fn generate(family: FamilyArg, n: usize, r: Option<usize>, d: Option<usize>, m: Option<usize>) -> Result<Family> {
    let need = |x: Option<usize>, flag: &str| x.ok_or_else(|| anyhow!("this family needs --{flag}"));
    Ok(match family {
        FamilyArg::Regular => Family::Regular { n, r: need(r, "r")? },
        FamilyArg::Bd => Family::BoundedDegree { n, d: need(d, "d")?, m: need(m, "m")? },
        FamilyArg::Planar => Family::Planar { n },
    })
}

fn bounds(alpha_d: &str, alpha: Option<&str>) -> Result<Value> {
    let parse = |t: &str| parse_rational(t).ok_or_else(|| anyhow!("{t:?} is not a rational like 40 or 7/3"));
    let mut b = duality_lower_bound(parse(alpha_d)?)?;
    if let Some(a) = alpha {
        b = b.with_alpha(&parse(a)?);
    }
    Ok(json!({
        "alpha_d": format_rational(&b.alpha_d),
        "lower_bound": format_rational(&b.lower_bound),
        "product": format_rational(&b.product()),
        "alpha": alpha,
        "consistent": b.consistent,
    }))
}

fn run(cli: Cli) -> Result<std::result::Result<Value, Failed>> {
    let value = match cli.command {
        Command::Analyze { file } => analyze(&read(&file)?),
        Command::Solve { file, problem } => solve(&read(&file)?, problem)?,
        Command::Kernelize { file, k, method, d, problem } => kernelize(read(&file)?, k, method, d, problem)?,
        Command::Generate { family, n, r, d, m, seed, out } => {
            let fam = generate(family, n, r, d, m)?;
            let h = harness::generate(fam, seed)?;
            let text = harness::emit(&h);
            let mut value = json!({ "params": fam, "seed": seed, "n": h.n(), "m": h.m() });
            match out {
                Some(path) => {
                    fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?;
                    value["out"] = json!(path.display().to_string());
                }
                None => value["file"] = json!(text),
            }
            value
        }
        Command::Verify { family, count, seed, no_timing } => {
            let family = match family {
                SweepArg::Regular => SweepFamily::Regular,
                SweepArg::Bd => SweepFamily::BoundedDegree,
                SweepArg::Planar => SweepFamily::Planar,
                SweepArg::Mixed => SweepFamily::Mixed,
            };
            let cfg = VerifyConfig { timing: !no_timing, ..Default::default() };
            let report = harness::sweep(family, count, seed, &cfg)?;
            let value = serde_json::to_value(&report)?;
            if report.failures > 0 {
                return Ok(Err(Failed(value)));
            }
            value
        }
        Command::Bounds { alpha_d, alpha } => bounds(&alpha_d, alpha.as_deref())?,
    };
    Ok(Ok(value))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Ok(value)) => {
            println!("{}", serde_json::to_string_pretty(&value).expect("json values serialize"));
            ExitCode::SUCCESS
        }
        Ok(Err(Failed(value))) => {
            println!("{}", serde_json::to_string_pretty(&value).expect("json values serialize"));
            eprintln!("hskernel: verification found oracle disagreements");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("hskernel: {e:#}");
            ExitCode::from(2)
        }
    }
}
