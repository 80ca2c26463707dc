//! Library side of the `vacuakit` command: configuration, the scan, report
//! and sweep commands, and their serializers. `main.rs` only parses flags
//! and maps errors to exit codes.

pub mod config;
pub mod error;
pub mod jsonfmt;
pub mod report;
pub mod scan;
pub mod sweep;

pub use config::{OutputFormat, RunConfig};
pub use error::CliError;
