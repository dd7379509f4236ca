//! Subcommand implementations. Each returns the text for stdout and an exit
//! code; errors become exit code 2 in `main`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::{Duration, Instant};

use drg_core::bipartite_expander::layer_count;
use drg_core::egs::{delta_for_epsilon, EgsParams};
use drg_core::gabber_galil::{expansion_constant, DEGREE};
use drg_core::graph::{BipartiteAdjacency, DagAdjacency};
use drg_core::verification::{
    check_neighborhood_growth, check_nkd_expansion, depth_robustness_exact, is_delta_bipartite,
    is_delta_local_expander, valiant_reduce, NkdWitness, Side, Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::{Command, GraphArgs, OutputFormat, Property};
use crate::error::{CliError, Result};
use crate::format::GraphFile;
use crate::spec::{Graph, GraphSpec, Mode};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_REFUSED: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

impl Outcome {
    fn pass(stdout: String) -> Self {
        Outcome {
            code: EXIT_PASS,
            stdout,
        }
    }

    fn verdict(passed: bool, stdout: String) -> Self {
        Outcome {
            code: if passed {
                EXIT_PASS
            } else {
                EXIT_COUNTEREXAMPLE
            },
            stdout,
        }
    }
}

pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Generate { graph, out } => generate(graph, out.as_deref()),
        Command::Verify {
            graph,
            input,
            property,
            e_budget,
            depth,
            format,
        } => verify(
            graph,
            input.as_deref(),
            *property,
            *e_budget,
            *depth,
            *format,
        ),
        Command::Attack {
            graph,
            input,
            i,
            format,
        } => attack(graph, input.as_deref(), *i, *format),
        Command::Bench {
            graph,
            samples,
            seed,
            out,
        } => bench(graph, *samples, *seed, out.as_deref()),
        Command::Info {
            delta,
            epsilon,
            n_nodes,
            format,
        } => info(*delta, *epsilon, *n_nodes, *format),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn spec_from_args(graph: &GraphArgs) -> Result<GraphSpec> {
    let mode = graph
        .mode
        .ok_or_else(|| CliError::params("--mode is required unless --input is given"))?;
    GraphSpec::from_raw(mode, &graph.raw())
}

/// The graph to operate on, from a file or from generation flags.
fn load(graph: &GraphArgs, input: Option<&Path>) -> Result<(GraphSpec, Graph)> {
    match input {
        Some(path) => {
            let file = GraphFile::parse(&read_file(path)?)?;
            Ok((file.spec()?, file.graph()?))
        }
        None => {
            let spec = spec_from_args(graph)?;
            let g = spec.build()?;
            Ok((spec, g))
        }
    }
}

fn params_field(spec: &GraphSpec) -> String {
    spec.params()
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn join(nodes: &[usize]) -> String {
    nodes
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn generate(graph: &GraphArgs, out: Option<&Path>) -> Result<Outcome> {
    let text = GraphFile::generate(&spec_from_args(graph)?)?.render();
    match out {
        Some(path) => {
            write_file(path, &text)?;
            Ok(Outcome::pass(String::new()))
        }
        None => Ok(Outcome::pass(text)),
    }
}

fn need_bipartite(g: &Graph, property: Property) -> Result<&BipartiteAdjacency> {
    match g {
        Graph::Bipartite(b) => Ok(b),
        Graph::Dag(_) => Err(CliError::params(format!(
            "{} needs a bipartite graph (gg, layered or be)",
            property.as_str()
        ))),
    }
}

fn need_dag(g: &Graph, property: Property) -> Result<&DagAdjacency> {
    match g {
        Graph::Dag(d) => Ok(d),
        Graph::Bipartite(_) => Err(CliError::params(format!(
            "{} needs a DAG (egs, lowindeg, path or complete)",
            property.as_str()
        ))),
    }
}

/// Verdict line plus an optional witness description.
struct Finding {
    passed: bool,
    value: Option<f64>,
    detail: String,
}

pub fn verify(
    graph: &GraphArgs,
    input: Option<&Path>,
    property: Property,
    e_budget: Option<usize>,
    depth: Option<f64>,
    format: OutputFormat,
) -> Result<Outcome> {
    let (spec, g) = load(graph, input)?;
    let explicit = graph.raw().resolve_delta()?;
    let delta = || -> Result<f64> {
        explicit.or(spec.delta()).ok_or_else(|| {
            CliError::params(format!("{} needs --delta or --epsilon", property.as_str()))
        })
    };
    let mut used_delta = None;
    let finding = match property {
        Property::Nkd => {
            let verdict =
                check_nkd_expansion(need_bipartite(&g, property)?, DEGREE, expansion_constant())?;
            Finding {
                passed: verdict.is_pass(),
                value: None,
                detail: match verdict {
                    Verdict::Pass => String::new(),
                    Verdict::Counterexample(NkdWitness::EdgeBudget { edges, limit }) => {
                        format!("edges {edges} exceed {limit}")
                    }
                    Verdict::Counterexample(NkdWitness::Expansion {
                        side,
                        set,
                        neighbors,
                        required,
                    }) => {
                        let side = match side {
                            Side::A => "inputs",
                            Side::B => "outputs",
                        };
                        format!(
                            "{side} {{{}}} have {neighbors} neighbors, need {required:.4}",
                            join(&set)
                        )
                    }
                },
            }
        }
        Property::Bipartite => {
            let d = delta()?;
            used_delta = Some(d);
            let verdict = is_delta_bipartite(need_bipartite(&g, property)?, d)?;
            Finding {
                passed: verdict.is_pass(),
                value: None,
                detail: verdict
                    .counterexample()
                    .map(|w| {
                        format!(
                            "X={{{}}} Y={{{}}} have no edges between them",
                            join(&w.x),
                            join(&w.y)
                        )
                    })
                    .unwrap_or_default(),
            }
        }
        Property::LocalExpander => {
            let d = delta()?;
            used_delta = Some(d);
            let verdict = is_delta_local_expander(need_dag(&g, property)?, d)?;
            Finding {
                passed: verdict.is_pass(),
                value: None,
                detail: verdict
                    .counterexample()
                    .map(|w| {
                        format!(
                            "v={} r={} X={{{}}} Y={{{}}} have no edges between them",
                            w.v,
                            w.r,
                            join(&w.x),
                            join(&w.y)
                        )
                    })
                    .unwrap_or_default(),
            }
        }
        Property::DepthRobust => {
            let e = e_budget.ok_or_else(|| CliError::params("depth-robust needs --e-budget"))?;
            let report = depth_robustness_exact(need_dag(&g, property)?, e)?;
            let target = depth.map(drg_core::verification::required_depth);
            let passed = target.is_none_or(|t| report.residual_depth >= t);
            Finding {
                passed,
                value: Some(report.residual_depth as f64),
                detail: format!(
                    "residual depth {} after removing {{{}}}{}",
                    report.residual_depth,
                    join(&report.worst_set),
                    target
                        .map(|t| format!(", required {t}"))
                        .unwrap_or_default()
                ),
            }
        }
        Property::Growth => {
            let m = match &spec {
                GraphSpec::Gg { m } | GraphSpec::Layered { m, .. } => *m,
                _ => return Err(CliError::params("growth needs mode gg or layered")),
            };
            let d = delta()?;
            used_delta = Some(d);
            let verdict = check_neighborhood_growth(m, d)?;
            Finding {
                passed: verdict.is_pass(),
                value: None,
                detail: verdict
                    .counterexample()
                    .map(|w| {
                        format!(
                            "start {{{}}} step {}: {} -> {}, need {:.4}",
                            join(&w.start),
                            w.step,
                            w.size,
                            w.next_size,
                            w.required
                        )
                    })
                    .unwrap_or_default(),
            }
        }
    };
    let result = if finding.passed {
        "pass"
    } else {
        "counterexample"
    };
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            writeln!(out, "property: {}", property.as_str()).unwrap();
            writeln!(out, "graph: {} {}", spec.mode(), params_field(&spec)).unwrap();
            if let Some(d) = used_delta {
                writeln!(out, "delta: {d}").unwrap();
            }
            writeln!(out, "result: {result}").unwrap();
            if !finding.detail.is_empty() {
                let label = if finding.passed { "detail" } else { "witness" };
                writeln!(out, "{label}: {}", finding.detail).unwrap();
            }
        }
        OutputFormat::Csv => {
            writeln!(
                out,
                "mode,params,property,delta,e_budget,depth,value,result,witness"
            )
            .unwrap();
            let opt = |x: Option<String>| x.unwrap_or_default();
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},\"{}\"",
                spec.mode(),
                params_field(&spec),
                property.as_str(),
                opt(used_delta.map(|d| d.to_string())),
                opt(e_budget.map(|e| e.to_string())),
                opt(depth.map(|d| d.to_string())),
                opt(finding.value.map(|v| v.to_string())),
                result,
                finding.detail
            )
            .unwrap();
        }
    }
    Ok(Outcome::verdict(finding.passed, out))
}

pub fn attack(
    graph: &GraphArgs,
    input: Option<&Path>,
    i: usize,
    format: OutputFormat,
) -> Result<Outcome> {
    if i == 0 {
        return Err(CliError::params("--i must be at least 1"));
    }
    let (spec, g) = load(graph, input)?;
    let dag = match &g {
        Graph::Dag(d) => d,
        Graph::Bipartite(_) => return Err(CliError::params("attack needs a DAG mode")),
    };
    let rep = valiant_reduce(dag, i)?;
    let n = dag.n();
    // the same bound with the family's β in place of the observed indegree
    let beta_bound = spec
        .beta()
        .map(|b| n as f64 * i as f64 * b as f64 / (n as f64).log2());
    let passed = rep.set_within_bound() && rep.depth_within_bound();
    let result = if passed { "pass" } else { "bound-violated" };
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            writeln!(out, "graph: {} {}", spec.mode(), params_field(&spec)).unwrap();
            writeln!(out, "i: {i}").unwrap();
            writeln!(out, "label bits: {}", rep.bits).unwrap();
            writeln!(out, "class sizes: {}", join(&rep.class_sizes)).unwrap();
            writeln!(out, "cut classes: {}", join(&rep.chosen)).unwrap();
            writeln!(out, "max indegree: {}", rep.indegree).unwrap();
            writeln!(
                out,
                "|S|: {} (bound {:.2})",
                rep.report.worst_set.len(),
                rep.set_bound
            )
            .unwrap();
            if let (Some(b), Some(bound)) = (spec.beta(), beta_bound) {
                writeln!(out, "|S| bound with beta={b}: {bound:.2}").unwrap();
            }
            writeln!(
                out,
                "residual depth: {} (bound {})",
                rep.report.residual_depth, rep.depth_bound
            )
            .unwrap();
            writeln!(out, "result: {result}").unwrap();
        }
        OutputFormat::Csv => {
            writeln!(
                out,
                "mode,params,n,i,bits,indegree,set_size,set_bound,beta,beta_set_bound,residual_depth,depth_bound,result"
            )
            .unwrap();
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{},{}",
                spec.mode(),
                params_field(&spec),
                n,
                i,
                rep.bits,
                rep.indegree,
                rep.report.worst_set.len(),
                rep.set_bound,
                spec.beta().map(|b| b.to_string()).unwrap_or_default(),
                beta_bound.map(|b| b.to_string()).unwrap_or_default(),
                rep.report.residual_depth,
                rep.depth_bound,
                result
            )
            .unwrap();
        }
    }
    Ok(Outcome::verdict(passed, out))
}

/// Result of timing `samples` parent queries.
#[derive(Debug, Clone)]
pub struct BenchRun {
    /// One row per sample; contains no timings, so it is reproducible.
    pub csv: String,
    pub latencies: Vec<Duration>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatencySummary {
    pub min: Duration,
    pub median: Duration,
    pub p99: Duration,
}

impl BenchRun {
    pub fn summary(&self) -> Option<LatencySummary> {
        if self.latencies.is_empty() {
            return None;
        }
        let mut sorted = self.latencies.clone();
        sorted.sort_unstable();
        let rank =
            |q: f64| sorted[((q * sorted.len() as f64).ceil() as usize).clamp(1, sorted.len()) - 1];
        Some(LatencySummary {
            min: sorted[0],
            median: rank(0.5),
            p99: rank(0.99),
        })
    }
}

/// FNV-1a over the decimal parent list, used as a compact CSV fingerprint.
fn checksum(parents: &[usize]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in join(parents).bytes() {
        h ^= u64::from(byte);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

pub fn bench_run(params: &EgsParams, samples: usize, seed: u64) -> Result<BenchRun> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut csv = String::from("n_nodes,delta,layers,certified,seed,sample,v,parents,checksum\n");
    let mut latencies = Vec::with_capacity(samples);
    for sample in 0..samples {
        let v = rng.gen_range(1..=params.n_nodes());
        let start = Instant::now();
        let parents = params.parents(v)?;
        latencies.push(start.elapsed());
        writeln!(
            csv,
            "{},{},{},{},{},{},{},{},{:016x}",
            params.n_nodes(),
            params.delta(),
            params.layers(),
            params.is_certified(),
            seed,
            sample,
            v,
            parents.len(),
            checksum(&parents)
        )
        .unwrap();
    }
    Ok(BenchRun { csv, latencies })
}

pub fn bench(graph: &GraphArgs, samples: usize, seed: u64, out: Option<&Path>) -> Result<Outcome> {
    if graph.mode.is_some_and(|m| m != Mode::Egs) {
        return Err(CliError::params("bench measures egs parent queries only"));
    }
    let raw = graph.raw();
    let n = raw
        .n_nodes
        .ok_or_else(|| CliError::params("bench needs --n-nodes"))?;
    let delta = raw
        .resolve_delta()?
        .ok_or_else(|| CliError::params("bench needs --delta or --epsilon"))?;
    let params = EgsParams::new(n, delta, raw.layers)?;
    let run = bench_run(&params, samples, seed)?;
    if let Some(path) = out {
        write_file(path, &run.csv)?;
    }
    let mut text = String::new();
    writeln!(
        text,
        "n_nodes={} delta={} layers={} certified={} seed={seed} samples={samples}",
        params.n_nodes(),
        params.delta(),
        params.layers(),
        params.is_certified()
    )
    .unwrap();
    if let Some(s) = run.summary() {
        let us = |d: Duration| d.as_secs_f64() * 1e6;
        writeln!(
            text,
            "min_us={:.3} median_us={:.3} p99_us={:.3}",
            us(s.min),
            us(s.median),
            us(s.p99)
        )
        .unwrap();
    }
    Ok(Outcome::pass(text))
}

pub fn info(
    delta: Option<f64>,
    epsilon: Option<f64>,
    n_nodes: Option<usize>,
    format: OutputFormat,
) -> Result<Outcome> {
    let delta = match (delta, epsilon) {
        (Some(_), Some(_)) => {
            return Err(CliError::params(
                "give either --delta or --epsilon, not both",
            ))
        }
        (Some(d), None) => d,
        (None, Some(e)) => delta_for_epsilon(e)?,
        (None, None) => return Err(CliError::params("info needs --delta or --epsilon")),
    };
    let mut rows: Vec<(&str, String)> = Vec::new();
    if let Some(e) = epsilon {
        rows.push(("epsilon", e.to_string()));
    }
    rows.push(("delta", format!("{delta:.6}")));
    rows.push(("layers_delta", layer_count(delta)?.to_string()));
    rows.push(("layers_delta_over_2", layer_count(delta / 2.0)?.to_string()));
    rows.push((
        "layers_delta_over_10",
        layer_count(delta / 10.0)?.to_string(),
    ));
    if let Some(n) = n_nodes {
        rows.push(("n_nodes", n.to_string()));
        rows.push((
            "beta",
            EgsParams::new(n, delta, None)?
                .max_indegree_bound()
                .to_string(),
        ));
    }
    rows.push(("d", format!("{:.6}", expansion_constant())));
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            for (k, v) in &rows {
                writeln!(out, "{k:<22}{v}").unwrap();
            }
        }
        OutputFormat::Csv => {
            let keys: Vec<&str> = rows.iter().map(|(k, _)| *k).collect();
            let vals: Vec<&str> = rows.iter().map(|(_, v)| v.as_str()).collect();
            writeln!(out, "{}\n{}", keys.join(","), vals.join(",")).unwrap();
        }
    }
    Ok(Outcome::pass(out))
}
