use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::spec::{Mode, RawParams};

#[derive(Debug, Parser)]
#[command(
    name = "drg",
    version,
    about = "Generate and check locally navigable depth-robust graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    /// (n, k, d) expansion of a bipartite graph, k = 5 and the Gabber–Galil constant d
    Nkd,
    /// δ-bipartite expansion
    Bipartite,
    /// δ-local expansion of a DAG
    LocalExpander,
    /// Exact (e, d) depth-robustness of a DAG
    DepthRobust,
    /// Layered neighborhood growth on the m×m torus
    Growth,
}

impl Property {
    pub fn as_str(self) -> &'static str {
        match self {
            Property::Nkd => "nkd",
            Property::Bipartite => "bipartite",
            Property::LocalExpander => "local-expander",
            Property::DepthRobust => "depth-robust",
            Property::Growth => "growth",
        }
    }
}

/// Flags describing a graph family.
#[derive(Debug, Clone, Default, Args)]
pub struct GraphArgs {
    /// Graph family
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    /// Torus side for gg and layered
    #[arg(long)]
    pub m: Option<usize>,
    /// Node count for be, egs, lowindeg (base graph), path and complete
    #[arg(long)]
    pub n_nodes: Option<usize>,
    /// Expansion parameter δ in (0, 1)
    #[arg(long, conflicts_with = "epsilon")]
    pub delta: Option<f64>,
    /// Target depth-robustness ε, mapped to δ; conflicts with --delta
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// Layer count override. WARNING: any value other than the computed one
    /// voids the expansion and depth-robustness guarantees; files record
    /// certified=false
    #[arg(long)]
    pub layers: Option<usize>,
}

impl GraphArgs {
    pub fn raw(&self) -> RawParams {
        RawParams {
            m: self.m,
            n_nodes: self.n_nodes,
            delta: self.delta,
            epsilon: self.epsilon,
            layers: self.layers,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a graph in the canonical text format
    Generate {
        #[command(flatten)]
        graph: GraphArgs,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a combinatorial property exhaustively
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Read the graph from a canonical file instead of generating it
        #[arg(long, conflicts_with = "mode")]
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        property: Property,
        /// Removal budget for depth-robust
        #[arg(long)]
        e_budget: Option<usize>,
        /// Required residual depth for depth-robust
        #[arg(long)]
        depth: Option<f64>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Run Valiant's depth-reduction attack
    Attack {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, conflicts_with = "mode")]
        input: Option<PathBuf>,
        /// Number of bit classes to cut
        #[arg(long)]
        i: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Time parent queries on an egs graph at uniformly sampled nodes
    Bench {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-sample CSV (deterministic, no timings)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the derived constants for δ or ε
    Info {
        #[arg(long, conflicts_with = "epsilon")]
        delta: Option<f64>,
        #[arg(long)]
        epsilon: Option<f64>,
        /// Power-of-two node count for the indegree bound β
        #[arg(long)]
        n_nodes: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}
