//! Library surface of the command-line tool: the typed reports every
//! subcommand emits, so tests and downstream tooling can parse them back.

pub mod report;
