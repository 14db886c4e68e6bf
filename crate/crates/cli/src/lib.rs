//! Command-line front end: group-spec parsing and evaluation, and the
//! `classify`, `verify`, `survey` and `export` commands.

pub mod commands;
pub mod error;
pub mod eval;
pub mod spec;

pub use commands::{run, Cli};
pub use error::CliError;
pub use spec::{parse_spec, Spec};
