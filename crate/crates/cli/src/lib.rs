//! Library behind the `arp` binary: argument parsing, instance files,
//! reports and the commands themselves.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 brute force refused
//! by its size guard, 4 instance class precondition failed.

pub mod args;
pub mod commands;
pub mod error;
pub mod files;
pub mod report;

pub use args::Cli;
pub use commands::run;
pub use error::{CliError, Result};
