//! Command-line front end for `hlab-core`.

pub mod algebra_spec;
pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod report;
pub mod suites;
