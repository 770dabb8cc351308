//! Library side of the `qnet` command-line tool.

pub mod app;
pub mod netfile;
pub mod suites;
