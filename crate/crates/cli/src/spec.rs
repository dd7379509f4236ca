//! Graph families the CLI can generate, and their header parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use drg_core::bipartite_expander::{get_parents_layered, BeParams};
use drg_core::egs::EgsParams;
use drg_core::gabber_galil;
use drg_core::graph::{BipartiteAdjacency, DagAdjacency};
use drg_core::indegree_reduction::LowIndegParams;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    /// Gabber–Galil expander on the m×m torus
    Gg,
    /// Layered Gabber–Galil expander
    Layered,
    /// Truncated δ-bipartite expander
    Be,
    /// δ-local-expander DAG on a power-of-two node count
    Egs,
    /// Indegree-2 reduction of the egs DAG
    Lowindeg,
    /// Directed path (reference DAG)
    Path,
    /// Complete DAG (reference DAG)
    Complete,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Gg => "gg",
            Mode::Layered => "layered",
            Mode::Be => "be",
            Mode::Egs => "egs",
            Mode::Lowindeg => "lowindeg",
            Mode::Path => "path",
            Mode::Complete => "complete",
        }
    }

    pub fn is_bipartite(self) -> bool {
        matches!(self, Mode::Gg | Mode::Layered | Mode::Be)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "gg" => Mode::Gg,
            "layered" => Mode::Layered,
            "be" => Mode::Be,
            "egs" => Mode::Egs,
            "lowindeg" => Mode::Lowindeg,
            "path" => Mode::Path,
            "complete" => Mode::Complete,
            other => return Err(CliError::params(format!("unknown mode '{other}'"))),
        })
    }
}

/// Fully resolved description of one graph.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSpec {
    Gg {
        m: usize,
    },
    Layered {
        m: usize,
        layers: usize,
    },
    Be(BeParams),
    Egs {
        params: EgsParams,
        epsilon: Option<f64>,
    },
    Lowindeg {
        params: LowIndegParams,
        epsilon: Option<f64>,
    },
    Path {
        n_nodes: usize,
    },
    Complete {
        n_nodes: usize,
    },
}

/// A materialized graph of either kind.
#[derive(Debug, Clone, PartialEq)]
pub enum Graph {
    Bipartite(BipartiteAdjacency),
    Dag(DagAdjacency),
}

impl Graph {
    pub fn n(&self) -> usize {
        match self {
            Graph::Bipartite(g) => g.n(),
            Graph::Dag(g) => g.n(),
        }
    }

    pub fn parents(&self, v: usize) -> &[usize] {
        match self {
            Graph::Bipartite(g) => g.parents(v),
            Graph::Dag(g) => g.parents(v),
        }
    }
}

/// Loose command-line inputs before validation.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RawParams {
    pub m: Option<usize>,
    pub n_nodes: Option<usize>,
    pub delta: Option<f64>,
    pub epsilon: Option<f64>,
    pub layers: Option<usize>,
}

impl RawParams {
    /// δ from `--delta`, or mapped from `--epsilon`.
    pub fn resolve_delta(&self) -> Result<Option<f64>> {
        match (self.delta, self.epsilon) {
            (Some(_), Some(_)) => Err(CliError::params(
                "give either --delta or --epsilon, not both",
            )),
            (Some(d), None) => Ok(Some(d)),
            (None, Some(e)) => Ok(Some(drg_core::egs::delta_for_epsilon(e)?)),
            (None, None) => Ok(None),
        }
    }
}

fn need<T>(v: Option<T>, flag: &str, mode: Mode) -> Result<T> {
    v.ok_or_else(|| CliError::params(format!("mode {mode} requires {flag}")))
}

impl GraphSpec {
    pub fn from_raw(mode: Mode, raw: &RawParams) -> Result<Self> {
        let delta = raw.resolve_delta()?;
        Ok(match mode {
            Mode::Gg => {
                let m = need(raw.m, "--m", mode)?;
                gabber_galil::GgParams::new(m)?;
                GraphSpec::Gg { m }
            }
            Mode::Layered => {
                let m = need(raw.m, "--m", mode)?;
                let layers = need(raw.layers, "--layers", mode)?;
                gabber_galil::GgParams::new(m)?;
                if layers == 0 {
                    return Err(CliError::params("--layers must be positive"));
                }
                GraphSpec::Layered { m, layers }
            }
            Mode::Be => GraphSpec::Be(BeParams::new(
                need(raw.n_nodes, "--n-nodes", mode)?,
                need(delta, "--delta or --epsilon", mode)?,
                raw.layers,
            )?),
            Mode::Egs => GraphSpec::Egs {
                params: EgsParams::new(
                    need(raw.n_nodes, "--n-nodes", mode)?,
                    need(delta, "--delta or --epsilon", mode)?,
                    raw.layers,
                )?,
                epsilon: raw.epsilon,
            },
            Mode::Lowindeg => GraphSpec::Lowindeg {
                params: LowIndegParams::new(EgsParams::new(
                    need(raw.n_nodes, "--n-nodes", mode)?,
                    need(delta, "--delta or --epsilon", mode)?,
                    raw.layers,
                )?),
                epsilon: raw.epsilon,
            },
            Mode::Path => GraphSpec::Path {
                n_nodes: need(raw.n_nodes, "--n-nodes", mode)?,
            },
            Mode::Complete => GraphSpec::Complete {
                n_nodes: need(raw.n_nodes, "--n-nodes", mode)?,
            },
        })
    }

    pub fn mode(&self) -> Mode {
        match self {
            GraphSpec::Gg { .. } => Mode::Gg,
            GraphSpec::Layered { .. } => Mode::Layered,
            GraphSpec::Be(_) => Mode::Be,
            GraphSpec::Egs { .. } => Mode::Egs,
            GraphSpec::Lowindeg { .. } => Mode::Lowindeg,
            GraphSpec::Path { .. } => Mode::Path,
            GraphSpec::Complete { .. } => Mode::Complete,
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            GraphSpec::Gg { m } | GraphSpec::Layered { m, .. } => m * m,
            GraphSpec::Be(p) => p.n_nodes(),
            GraphSpec::Egs { params, .. } => params.n_nodes(),
            GraphSpec::Lowindeg { params, .. } => params.n_nodes(),
            GraphSpec::Path { n_nodes } | GraphSpec::Complete { n_nodes } => *n_nodes,
        }
    }

    /// δ the graph was built for, if any.
    pub fn delta(&self) -> Option<f64> {
        match self {
            GraphSpec::Be(p) => Some(p.delta()),
            GraphSpec::Egs { params, .. } => Some(params.delta()),
            GraphSpec::Lowindeg { params, .. } => Some(params.base().delta()),
            _ => None,
        }
    }

    /// `β` for the egs-based modes.
    pub fn beta(&self) -> Option<usize> {
        match self {
            GraphSpec::Egs { params, .. } => Some(params.max_indegree_bound()),
            GraphSpec::Lowindeg { params, .. } => Some(params.beta()),
            _ => None,
        }
    }

    /// Header parameters, keys sorted.
    pub fn params(&self) -> BTreeMap<&'static str, String> {
        let mut out = BTreeMap::new();
        let egs =
            |p: &EgsParams, epsilon: &Option<f64>, out: &mut BTreeMap<&'static str, String>| {
                out.insert("certified", p.is_certified().to_string());
                out.insert("delta", p.delta().to_string());
                out.insert("layers", p.layers().to_string());
                out.insert("n_nodes", p.n_nodes().to_string());
                if let Some(e) = epsilon {
                    out.insert("epsilon", e.to_string());
                }
            };
        match self {
            GraphSpec::Gg { m } => {
                out.insert("m", m.to_string());
            }
            GraphSpec::Layered { m, layers } => {
                out.insert("layers", layers.to_string());
                out.insert("m", m.to_string());
            }
            GraphSpec::Be(p) => {
                out.insert("certified", p.is_certified().to_string());
                out.insert("delta", p.delta().to_string());
                out.insert("layers", p.layers().to_string());
                out.insert("n_nodes", p.n_nodes().to_string());
            }
            GraphSpec::Egs { params, epsilon } => egs(params, epsilon, &mut out),
            GraphSpec::Lowindeg { params, epsilon } => {
                egs(params.base(), epsilon, &mut out);
                out.insert("beta", params.beta().to_string());
            }
            GraphSpec::Path { n_nodes } | GraphSpec::Complete { n_nodes } => {
                out.insert("n_nodes", n_nodes.to_string());
            }
        }
        out
    }

    /// Inverse of [`params`](Self::params). Derived values (`layers` when
    /// certified, `beta`) must agree with what the parameters imply.
    pub fn from_params(mode: Mode, params: &BTreeMap<String, String>) -> Result<Self> {
        fn get<T: FromStr>(params: &BTreeMap<String, String>, key: &str) -> Result<Option<T>> {
            params
                .get(key)
                .map(|s| {
                    s.parse::<T>()
                        .map_err(|_| CliError::params(format!("cannot parse {key}={s}")))
                })
                .transpose()
        }
        let certified: Option<bool> = get(params, "certified")?;
        let layers: Option<usize> = get(params, "layers")?;
        let raw = RawParams {
            m: get(params, "m")?,
            n_nodes: get(params, "n_nodes")?,
            delta: get(params, "delta")?,
            epsilon: None,
            layers: match certified {
                Some(true) => None,
                _ => layers,
            },
        };
        let epsilon: Option<f64> = get(params, "epsilon")?;
        let mut spec = GraphSpec::from_raw(mode, &raw)?;
        match &mut spec {
            GraphSpec::Egs { epsilon: e, .. } | GraphSpec::Lowindeg { epsilon: e, .. } => {
                *e = epsilon
            }
            _ => {}
        }
        let expected = spec.params();
        let mut allowed: Vec<&str> = expected.keys().copied().collect();
        allowed.sort_unstable();
        for (k, v) in params {
            match expected.get(k.as_str()) {
                Some(want) if want == v => {}
                Some(want) => {
                    return Err(CliError::params(format!(
                        "{k}={v} is inconsistent (expected {want})"
                    )));
                }
                None => {
                    return Err(CliError::params(format!(
                        "unexpected parameter {k} for mode {mode}"
                    )))
                }
            }
        }
        if expected.len() != params.len() {
            return Err(CliError::params(format!(
                "mode {mode} needs parameters {}",
                allowed.join(", ")
            )));
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<Graph> {
        Ok(match self {
            GraphSpec::Gg { m } => {
                let m = *m;
                Graph::Bipartite(BipartiteAdjacency::from_fn(m * m, |j| {
                    gabber_galil::get_parents_gg(m, j)
                })?)
            }
            GraphSpec::Layered { m, layers } => {
                let (m, layers) = (*m, *layers);
                Graph::Bipartite(BipartiteAdjacency::from_fn(m * m, |j| {
                    get_parents_layered(m, layers, j)
                })?)
            }
            GraphSpec::Be(p) => {
                Graph::Bipartite(BipartiteAdjacency::from_fn(p.n_nodes(), |j| p.parents(j))?)
            }
            GraphSpec::Egs { params, .. } => Graph::Dag(params.build()),
            GraphSpec::Lowindeg { params, .. } => Graph::Dag(params.build()),
            GraphSpec::Path { n_nodes } => Graph::Dag(DagAdjacency::path(*n_nodes)),
            GraphSpec::Complete { n_nodes } => Graph::Dag(DagAdjacency::complete(*n_nodes)),
        })
    }
}
