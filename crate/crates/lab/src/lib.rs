//! Command-line front end for `coxeter-core`: canonical JSON reports,
//! human-readable tables and the verification suites.

pub mod cli;
pub mod commands;
pub mod json;
pub mod report;
pub mod suites;
