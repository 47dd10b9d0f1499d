//! Command-line driver, OEIS client, output formats and a threaded
//! profile source for `permstat-core`.

pub mod cli;
pub mod config;
pub mod oeis;
pub mod parallel;
pub mod render;
