//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use drg_cli::commands::bench_run;
use drg_cli::{GraphFile, GraphSpec, Mode, RawParams};
use drg_core::bipartite_expander::{get_parents_be, get_parents_layered, layer_count, m_of};
use drg_core::egs::EgsParams;
use drg_core::gabber_galil::{expansion_constant, get_parents_gg, DEGREE};
use drg_core::graph::BipartiteAdjacency;
use drg_core::indegree_reduction::LowIndegParams;
use drg_core::verification::{
    check_neighborhood_growth, check_nkd_expansion, count_gamma_good, depth_robustness_exact,
    is_delta_bipartite, is_delta_local_expander, valiant_reduce,
};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn gg_expansion() -> Check {
    let d = expansion_constant();
    for m in 2..=4 {
        let g = BipartiteAdjacency::from_fn(m * m, |j| get_parents_gg(m, j)).map_err(err)?;
        let verdict = check_nkd_expansion(&g, DEGREE, d).map_err(err)?;
        ensure(verdict.is_pass(), || format!("m={m}: {verdict:?}"))?;
    }
    Ok("m in {2,3,4}, k=5, d=(2-sqrt3)/4, all subsets of both sides".into())
}

fn edge_budget() -> Check {
    for m in 1..=64 {
        let mut edges = 0;
        for j in 1..=m * m {
            edges += get_parents_gg(m, j).map_err(err)?.len();
        }
        ensure(edges <= 5 * m * m, || format!("m={m}: {edges} edges"))?;
    }
    Ok("sum of parent counts <= 5m^2 for m <= 64".into())
}

fn layered_amplification() -> Check {
    let layers = layer_count(0.5).map_err(err)?;
    ensure(layers == 1, || format!("layer_count(0.5) = {layers}"))?;
    for m in [3, 4] {
        let g = BipartiteAdjacency::from_fn(m * m, |j| get_parents_layered(m, layers, j))
            .map_err(err)?;
        let verdict = is_delta_bipartite(&g, 0.5).map_err(err)?;
        ensure(verdict.is_pass(), || format!("m={m}: {verdict:?}"))?;
    }
    Ok("m in {3,4}, one layer, 0.5-bipartite".into())
}

fn neighborhood_growth() -> Check {
    for m in [3, 4] {
        let verdict = check_neighborhood_growth(m, 0.5).map_err(err)?;
        ensure(verdict.is_pass(), || format!("m={m}: {verdict:?}"))?;
    }
    Ok("m in {3,4}, every start set of size ceil(m^2/2)".into())
}

fn truncation() -> Check {
    for n in [3, 5, 7, 10, 12] {
        let g = BipartiteAdjacency::from_fn(n, |j| get_parents_be(n, 0.5, j)).map_err(err)?;
        let verdict = is_delta_bipartite(&g, 0.5).map_err(err)?;
        ensure(verdict.is_pass(), || format!("N={n}: {verdict:?}"))?;
    }
    Ok("N in {3,5,7,10,12} at delta 0.5".into())
}

fn m_sandwich() -> Check {
    for n in 1..=1_000_000usize {
        let m = m_of(n);
        ensure(m * m >= n && 2 * n >= m * m, || format!("N={n}: m={m}"))?;
    }
    Ok("m(N)^2 >= N >= m(N)^2/2 for N <= 10^6".into())
}

fn local_expansion() -> Check {
    for n in [8, 16] {
        let g = EgsParams::new(n, 0.25, None).map_err(err)?.build();
        let verdict = is_delta_local_expander(&g, 0.25).map_err(err)?;
        ensure(verdict.is_pass(), || format!("N={n}: {verdict:?}"))?;
    }
    Ok("N in {8,16}, delta 0.25, all windows".into())
}

fn depth_robustness() -> Check {
    let g = EgsParams::new(16, 0.25, None).map_err(err)?.build();
    let gamma = 0.55;
    let mut seen = Vec::new();
    for e in 1..=4usize {
        let rep = depth_robustness_exact(&g, e).map_err(err)?;
        let need = (16.0 - e as f64 * (1.0 + gamma) / (1.0 - gamma) - 1e-9).ceil() as usize;
        ensure(rep.residual_depth >= need, || {
            format!(
                "e={e}: residual {} < {need} after {:?}",
                rep.residual_depth, rep.worst_set
            )
        })?;
        seen.push(format!("e={e}:{}>={need}", rep.residual_depth));
    }
    Ok(seen.join(" "))
}

fn gamma_good_bound() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut worst = usize::MAX;
    for _ in 0..200 {
        let size = rng.gen_range(1..=6);
        let s: Vec<usize> = sample(&mut rng, 16, size)
            .into_iter()
            .map(|x| x + 1)
            .collect();
        let good = count_gamma_good(&s, 0.5, 16);
        ensure(good + 3 * s.len() >= 16, || {
            format!("S={s:?}: {good} good nodes")
        })?;
        worst = worst.min(good + 3 * s.len() - 16);
    }
    Ok(format!("200 sets, smallest slack {worst}"))
}

fn valiant_attack() -> Check {
    let n = 1usize << 10;
    let params = EgsParams::new(n, 0.25, None).map_err(err)?;
    let beta = params.max_indegree_bound();
    let g = params.build();
    let mut seen = Vec::new();
    for i in 1..=3usize {
        let rep = valiant_reduce(&g, i).map_err(err)?;
        let size = rep.report.worst_set.len();
        let bound = (n * i * beta) as f64 / 10.0;
        let residual = drg_core::verification::longest_path_avoiding(&g, &rep.report.worst_set);
        ensure(residual == rep.report.residual_depth, || {
            format!("i={i}: reported depth disagrees")
        })?;
        ensure(size as f64 <= bound, || {
            format!("i={i}: |S|={size} > {bound}")
        })?;
        ensure(residual <= n >> i, || {
            format!("i={i}: residual {residual} > {}", n >> i)
        })?;
        seen.push(format!("i={i}:|S|={size},depth={residual}"));
    }
    Ok(seen.join(" "))
}

fn gadget() -> Check {
    let n = 1usize << 8;
    let params = LowIndegParams::new(EgsParams::new(n, 0.25, Some(1)).map_err(err)?);
    let g = params.build();
    ensure(g.n() == 2 * n * params.beta(), || {
        format!("{} nodes, beta {}", g.n(), params.beta())
    })?;
    ensure(g.max_indegree() <= 2, || {
        format!("max indegree {}", g.max_indegree())
    })?;
    for v in 1..=g.n() {
        ensure(g.parents(v).iter().all(|&u| u < v), || {
            format!("node {v} has a later parent")
        })?;
    }
    Ok(format!(
        "beta={} nodes={} max indegree {}",
        params.beta(),
        g.n(),
        g.max_indegree()
    ))
}

fn transfer() -> Check {
    let base_params = EgsParams::new(8, 0.25, Some(1)).map_err(err)?;
    let base = base_params.build();
    let reduced_params = LowIndegParams::new(base_params);
    let beta = reduced_params.beta();
    let reduced = reduced_params.build();
    let mut seen = Vec::new();
    for e in 1..=2usize {
        let b = depth_robustness_exact(&base, e)
            .map_err(err)?
            .residual_depth;
        let r = depth_robustness_exact(&reduced, e)
            .map_err(err)?
            .residual_depth;
        ensure(r >= b, || format!("e={e}: reduced {r} < base {b}"))?;
        ensure(r >= b * beta, || {
            format!("e={e}: reduced {r} < base {b} x beta {beta}")
        })?;
        seen.push(format!("e={e}:base={b},reduced={r}"));
    }
    Ok(format!("beta={beta} {}", seen.join(" ")))
}

fn navigability() -> Check {
    let params = EgsParams::new(1 << 20, 0.25, Some(2)).map_err(err)?;
    let first = bench_run(&params, 10_000, 42).map_err(err)?;
    let second = bench_run(&params, 10_000, 42).map_err(err)?;
    ensure(first.csv == second.csv, || {
        "CSV differs between runs".into()
    })?;
    let s = first.summary().ok_or("no samples")?;
    ensure(s.median.as_secs_f64() < 0.010, || {
        format!("median {:?}", s.median)
    })?;
    Ok(format!(
        "median {:?}, p99 {:?}, CSV identical",
        s.median, s.p99
    ))
}

fn round_trip() -> Check {
    let cases: [(Mode, RawParams); 7] = [
        (
            Mode::Gg,
            RawParams {
                m: Some(1),
                ..Default::default()
            },
        ),
        (
            Mode::Layered,
            RawParams {
                m: Some(1),
                layers: Some(1),
                ..Default::default()
            },
        ),
        (
            Mode::Be,
            RawParams {
                n_nodes: Some(1),
                delta: Some(0.25),
                ..Default::default()
            },
        ),
        (
            Mode::Egs,
            RawParams {
                n_nodes: Some(1),
                delta: Some(0.25),
                ..Default::default()
            },
        ),
        (
            Mode::Lowindeg,
            RawParams {
                n_nodes: Some(1),
                delta: Some(0.25),
                ..Default::default()
            },
        ),
        (
            Mode::Path,
            RawParams {
                n_nodes: Some(1),
                ..Default::default()
            },
        ),
        (
            Mode::Complete,
            RawParams {
                n_nodes: Some(1),
                ..Default::default()
            },
        ),
    ];
    let mut modes = Vec::new();
    for (mode, raw) in cases {
        let spec = GraphSpec::from_raw(mode, &raw).map_err(err)?;
        let text = GraphFile::generate(&spec).map_err(err)?.render();
        let parsed = GraphFile::parse(&text).map_err(err)?;
        let again = parsed.regenerate().map_err(err)?.render();
        ensure(again == text, || {
            format!("{mode}: regenerated file differs")
        })?;
        let params: BTreeMap<String, String> = parsed.params.clone();
        ensure(
            GraphSpec::from_params(mode, &params).map_err(err)? == spec,
            || format!("{mode}: header"),
        )?;
        modes.push(mode.as_str());
    }
    Ok(modes.join(" "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("gabber-galil expansion", gg_expansion),
        ("edge budget", edge_budget),
        ("layered amplification", layered_amplification),
        ("neighborhood growth", neighborhood_growth),
        ("truncation", truncation),
        ("m(N) sandwich", m_sandwich),
        ("egs local expansion", local_expansion),
        ("depth robustness", depth_robustness),
        ("gamma-good lower bound", gamma_good_bound),
        ("valiant attack", valiant_attack),
        ("indegree-2 gadget", gadget),
        ("robustness transfer", transfer),
        ("local navigability", navigability),
        ("format round trip", round_trip),
    ];
    let mut failed = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail} ({secs:.2}s)", idx + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {why} ({secs:.2}s)", idx + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
