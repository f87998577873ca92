//! File formats and the `bench` command line on top of `gobench-core`.

pub mod audit;
pub mod catalog;
pub mod cli;
pub mod grid;
pub mod runs;
pub mod text;
