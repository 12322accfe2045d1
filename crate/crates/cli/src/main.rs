//! `nilgraph`: command-line access to graph Lie algebras.
//!
//! Every subcommand prints one JSON document. Exit status is 0 on success,
//! 1 when a verification fails and 2 for malformed input or usage errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use nilgraph::graph::{canonical_form, enumerate_graphs, graph_iso};
use nilgraph::iso::{classify_by_total, lie_iso_equivalent_with, theorem_check};
use nilgraph::liealg::{is_two_step, jacobi_holds, StructureTable};
use nilgraph::pcl::verify_pcl_quotient;
use nilgraph::proofreplay::{replay_random, ReplayInput};
use nilgraph::{
    functor_pushforward, parse_graph, Error, Field, Graph, GraphLieAlgebra, NilpotentGroup,
    VertexPermutation,
};

#[derive(Parser)]
#[command(
    name = "nilgraph",
    version,
    about = "Two-step nilpotent Lie algebras of graphs"
)]
struct Cli {
    /// Field: `q` or `fp:<p>` with p an odd prime. The default depends on the command.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Write the output document here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for the isomorphism search.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structure constants of the graph algebra.
    Build { graph: String },
    /// Invariants, Jacobi identity and two-step checks for one algebra.
    Check {
        graph: String,
        /// Random triples for the two-step check.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Graph isomorphism with a witness permutation.
    IsoGraph { first: String, second: String },
    /// Graph and Lie isomorphism side by side.
    IsoLie { first: String, second: String },
    /// Isomorphism classes of graphs on `n` vertices.
    Enumerate { n: usize },
    /// Graph algebras of total dimension `--total`, with fingerprints.
    Classify {
        #[arg(long)]
        total: usize,
    },
    /// Product of two group elements in exponential coordinates.
    GroupMul {
        graph: String,
        /// `{"v": [...], "z": [...]}`, inline or a path.
        left: String,
        right: String,
    },
    /// The Lie isomorphism induced by a graph isomorphism.
    Functor {
        source: String,
        target: String,
        /// Vertex images, e.g. `2,0,1`.
        #[arg(long)]
        perm: String,
    },
    /// Replays the finite checks on a Lie isomorphism.
    Replay { input: String },
    /// Certifies the free-algebra presentation of a graph algebra.
    PclVerify { graph: String },
    /// Compares graph and Lie isomorphism on all small pairs.
    TheoremCheck {
        #[arg(long, default_value_t = 4)]
        nmax: usize,
    },
}

struct Outcome {
    doc: Value,
    ok: bool,
}

impl Outcome {
    fn ok(doc: Value) -> Outcome {
        Outcome { doc, ok: true }
    }
}

/// Inline JSON if the argument looks like it, file contents otherwise.
fn read_input(arg: &str) -> anyhow::Result<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    fs::read_to_string(arg).with_context(|| format!("cannot read {arg}"))
}

fn read_graph(arg: &str) -> anyhow::Result<Graph> {
    parse_graph(&read_input(arg)?).with_context(|| format!("graph {arg}"))
}

fn read_json(arg: &str) -> anyhow::Result<Value> {
    serde_json::from_str(&read_input(arg)?).with_context(|| format!("JSON in {arg}"))
}

fn field(cli: &Cli, default: &str) -> anyhow::Result<Field> {
    let text = cli.field.as_deref().unwrap_or(default);
    let spec = text.parse().with_context(|| format!("--field {text}"))?;
    Field::create(spec).with_context(|| format!("--field {text}"))
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    Ok(match &cli.command {
        Command::Build { graph } => {
            let alg = GraphLieAlgebra::new(read_graph(graph)?, field(cli, "q")?);
            Outcome::ok(alg.export_structure_constants().to_json())
        }
        Command::Check { graph, samples } => {
            let g = read_graph(graph)?;
            let alg = GraphLieAlgebra::new(g.clone(), field(cli, "q")?);
            let inv = alg.structural_invariants();
            let jacobi = jacobi_holds(&alg);
            let mut triples_ok = 0;
            for _ in 0..*samples {
                let (x, y, z) = (
                    alg.random_element(&mut rng),
                    alg.random_element(&mut rng),
                    alg.random_element(&mut rng),
                );
                if alg.bracket(&x, &alg.bracket(&y, &z)?)?.is_zero() {
                    triples_ok += 1;
                }
            }
            let dim_ok = inv.dim == g.n() + g.edge_count();
            let derived_ok = inv.derived_dim == g.edge_count();
            let two_step = is_two_step(&alg);
            let ok = dim_ok && derived_ok && jacobi && two_step && triples_ok == *samples;
            Outcome {
                doc: json!({
                    "graph": g.to_json(),
                    "field": alg.field().to_string(),
                    "dim": inv.dim,
                    "derived_dim": inv.derived_dim,
                    "center_dim": inv.center_dim,
                    "is_abelian": inv.is_abelian,
                    "is_two_step": two_step,
                    "dim_ok": dim_ok,
                    "derived_ok": derived_ok,
                    "jacobi": jacobi,
                    "random_triples": samples,
                    "random_triples_ok": triples_ok,
                    "passed": ok,
                }),
                ok,
            }
        }
        Command::IsoGraph { first, second } => {
            let (g, h) = (read_graph(first)?, read_graph(second)?);
            let w = graph_iso(&g, &h);
            Outcome::ok(json!({
                "graphs": [g.to_json(), h.to_json()],
                "graph_iso": w.is_some(),
                "graph_witness": w.as_ref().map(|p| json!(p.images())),
            }))
        }
        Command::IsoLie { first, second } => {
            let (g, h) = (read_graph(first)?, read_graph(second)?);
            let report = lie_iso_equivalent_with(&g, &h, field(cli, "fp:3")?, cli.jobs)?;
            Outcome::ok(report.to_json())
        }
        Command::Enumerate { n } => {
            let graphs = enumerate_graphs(*n)?;
            let listed = graphs
                .iter()
                .map(|g| Ok(json!({ "graph": g.to_json(), "canonical": canonical_form(g)? })))
                .collect::<nilgraph::Result<Vec<_>>>()?;
            Outcome::ok(json!({ "n": n, "count": graphs.len(), "graphs": listed }))
        }
        Command::Classify { total } => {
            let c = classify_by_total(*total, field(cli, "fp:3")?, cli.jobs)?;
            Outcome {
                ok: c.separated(),
                doc: c.to_json(),
            }
        }
        Command::GroupMul { graph, left, right } => {
            let group =
                NilpotentGroup::new(GraphLieAlgebra::new(read_graph(graph)?, field(cli, "q")?));
            let a = group.from_json(&read_json(left)?).context("left element")?;
            let b = group
                .from_json(&read_json(right)?)
                .context("right element")?;
            Outcome::ok(group.multiply(&a, &b)?.to_json())
        }
        Command::Functor {
            source,
            target,
            perm,
        } => {
            let (g, h) = (read_graph(source)?, read_graph(target)?);
            let sigma = VertexPermutation::parse(perm).context("--perm")?;
            let map = functor_pushforward(&sigma, &g, &h, field(cli, "q")?)?;
            Outcome::ok(map.to_json())
        }
        Command::Replay { input } => {
            let mut value = read_json(input)?;
            if value.get("field").is_none() {
                value["field"] = json!(field(cli, "q")?.to_string());
            }
            let r = ReplayInput::from_json(&value)?;
            let report = replay_random(&r, &mut rng)?;
            Outcome {
                ok: report.all_ok(),
                doc: report.to_json(),
            }
        }
        Command::PclVerify { graph } => {
            let cert = verify_pcl_quotient(&read_graph(graph)?, field(cli, "q")?);
            Outcome {
                ok: cert.holds,
                doc: cert.to_json(),
            }
        }
        Command::TheoremCheck { nmax } => {
            let report = theorem_check(*nmax, field(cli, "fp:3")?, cli.jobs)?;
            Outcome {
                ok: report.violations.is_empty(),
                doc: report.to_json(),
            }
        }
    })
}

fn check_flags(cli: &Cli) -> anyhow::Result<()> {
    if cli.jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    Ok(())
}

fn emit(cli: &Cli, doc: &Value) -> anyhow::Result<()> {
    let text = format!("{}\n", serde_json::to_string_pretty(doc)?);
    match &cli.out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Refusals of a map or permutation are verification failures; everything
/// else that goes wrong is bad input.
fn is_verification_failure(e: &anyhow::Error) -> bool {
    matches!(
        e.downcast_ref::<Error>(),
        Some(Error::NotGraphIsomorphism(_) | Error::NotLieIsomorphism(_))
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = check_flags(&cli).and_then(|()| run(&cli)).and_then(|o| {
        emit(&cli, &o.doc)?;
        Ok(o.ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if is_verification_failure(&e) { 1 } else { 2 })
        }
    }
}
