//! Parameter sweeps over the `bwm-core` checks, with JSON reports and figure
//! CSVs.

pub mod commands;
pub mod config;
pub mod csv;
pub mod error;
pub mod report;

pub use commands::{execute, Run};
pub use config::{Command, ResolvedConfig, RunConfig};
pub use error::CliError;
pub use report::{CheckRecord, Status, SuiteReport};
