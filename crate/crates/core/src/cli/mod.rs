//! Text format, reports and subcommands of the `liesymp` binary.

pub mod commands;
pub mod format;
pub mod report;

pub use commands::{load_source, Loaded, Outcome};
pub use format::{parse, AlgebraFile, BracketRule, Diagnostic, TorusBlock};
