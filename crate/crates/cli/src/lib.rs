//! Command-line front end for the parabolic cone computations: a JSON
//! document schema for bundle data, a structured report with text and JSON
//! renderings, and a concurrent corpus runner.

pub mod document;
pub mod report;
pub mod runner;
