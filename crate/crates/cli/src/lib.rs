//! Command-line front end for `drg-core`: canonical graph files, exhaustive
//! property checks, Valiant's attack, and a parent-query benchmark.

pub mod args;
pub mod commands;
pub mod error;
pub mod format;
pub mod spec;

pub use commands::{Outcome, EXIT_COUNTEREXAMPLE, EXIT_PASS, EXIT_REFUSED};
pub use error::{CliError, Result};
pub use format::GraphFile;
pub use spec::{Graph, GraphSpec, Mode, RawParams};
