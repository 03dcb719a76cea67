//! Input parsing, subcommand execution and report formatting for the
//! `rigidkin` command-line tool.

pub mod config;
pub mod output;
pub mod report;
pub mod run;

pub use config::{parse_configuration, ConfigError, ConfigurationFile, Mode};
pub use report::RunReport;
pub use run::{run_subcommand, Command, Flags, Format};
