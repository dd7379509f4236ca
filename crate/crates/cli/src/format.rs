//! Canonical line-oriented graph file.
//!
//! ```text
//! drg v1
//! mode=<mode>
//! params=<key=value ...>      keys sorted, space separated
//! nodes=<count>
//! <v>: p1 p2 ...              one line per node, parents ascending
//! ```
//!
//! The header fully determines the body, so regenerating from a parsed header
//! reproduces the file byte for byte.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{CliError, Result};
use crate::spec::{Graph, GraphSpec, Mode};

pub const FORMAT_TAG: &str = "drg v1";

#[derive(Debug, Clone, PartialEq)]
pub struct GraphFile {
    pub mode: Mode,
    pub params: BTreeMap<String, String>,
    pub parents: Vec<Vec<usize>>,
}

fn bad(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Format {
        line,
        msg: msg.into(),
    }
}

impl GraphFile {
    pub fn from_graph(spec: &GraphSpec, graph: &Graph) -> Self {
        GraphFile {
            mode: spec.mode(),
            params: spec
                .params()
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            parents: (1..=graph.n()).map(|v| graph.parents(v).to_vec()).collect(),
        }
    }

    pub fn generate(spec: &GraphSpec) -> Result<Self> {
        Ok(Self::from_graph(spec, &spec.build()?))
    }

    pub fn nodes(&self) -> usize {
        self.parents.len()
    }

    /// Graph family described by the header.
    pub fn spec(&self) -> Result<GraphSpec> {
        let spec = GraphSpec::from_params(self.mode, &self.params)?;
        if spec.node_count() != self.nodes() {
            return Err(CliError::params(format!(
                "header implies {} nodes but the file lists {}",
                spec.node_count(),
                self.nodes()
            )));
        }
        Ok(spec)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        writeln!(out, "{FORMAT_TAG}").unwrap();
        writeln!(out, "mode={}", self.mode).unwrap();
        writeln!(out, "params={}", params.join(" ")).unwrap();
        writeln!(out, "nodes={}", self.nodes()).unwrap();
        for (idx, list) in self.parents.iter().enumerate() {
            write!(out, "{}:", idx + 1).unwrap();
            for p in list {
                write!(out, " {p}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let body = text
            .strip_suffix('\n')
            .ok_or_else(|| bad(0, "file must end with a newline"))?;
        let mut lines = body.split('\n').enumerate().map(|(i, l)| (i + 1, l));
        let mut next = |what: &str| {
            lines
                .next()
                .ok_or_else(|| bad(0, format!("missing {what} line")))
        };

        let (n, tag) = next("format")?;
        if tag != FORMAT_TAG {
            return Err(bad(n, format!("expected '{FORMAT_TAG}'")));
        }
        let (n, mode_line) = next("mode")?;
        let mode: Mode = mode_line
            .strip_prefix("mode=")
            .ok_or_else(|| bad(n, "expected mode=<mode>"))?
            .parse()
            .map_err(|_| bad(n, "unknown mode"))?;
        let (n, params_line) = next("params")?;
        let raw = params_line
            .strip_prefix("params=")
            .ok_or_else(|| bad(n, "expected params=..."))?;
        let mut params = BTreeMap::new();
        let mut last: Option<&str> = None;
        for pair in raw.split(' ').filter(|_| !raw.is_empty()) {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| bad(n, format!("parameter '{pair}' is not key=value")))?;
            if last.is_some_and(|prev| prev >= k) {
                return Err(bad(n, "parameter keys must be sorted and unique"));
            }
            last = Some(k);
            params.insert(k.to_string(), v.to_string());
        }
        let (n, nodes_line) = next("nodes")?;
        let nodes: usize = nodes_line
            .strip_prefix("nodes=")
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad(n, "expected nodes=<count>"))?;

        let mut parents = Vec::with_capacity(nodes);
        for (n, line) in lines {
            let expect = parents.len() + 1;
            let (label, rest) = line
                .split_once(':')
                .ok_or_else(|| bad(n, "expected '<v>:'"))?;
            if label != expect.to_string() {
                return Err(bad(n, format!("expected node {expect}")));
            }
            let mut list = Vec::new();
            if !rest.is_empty() {
                let items = rest
                    .strip_prefix(' ')
                    .ok_or_else(|| bad(n, "parents must follow ': '"))?;
                for tok in items.split(' ') {
                    let p: usize = tok
                        .parse()
                        .map_err(|_| bad(n, format!("bad parent '{tok}'")))?;
                    if p.to_string() != tok || list.last().is_some_and(|&q| q >= p) {
                        return Err(bad(n, "parents must be canonical and strictly ascending"));
                    }
                    list.push(p);
                }
            }
            parents.push(list);
        }
        if parents.len() != nodes {
            return Err(bad(
                0,
                format!("nodes={nodes} but {} node lines", parents.len()),
            ));
        }
        Ok(GraphFile {
            mode,
            params,
            parents,
        })
    }

    /// Rebuilds the graph from the header alone.
    pub fn regenerate(&self) -> Result<Self> {
        GraphFile::generate(&self.spec()?)
    }

    /// The parsed body as a graph of the kind the mode implies.
    pub fn graph(&self) -> Result<Graph> {
        Ok(if self.mode.is_bipartite() {
            Graph::Bipartite(drg_core::graph::BipartiteAdjacency::new(
                self.parents.clone(),
            )?)
        } else {
            Graph::Dag(drg_core::graph::DagAdjacency::new(self.parents.clone())?)
        })
    }
}
