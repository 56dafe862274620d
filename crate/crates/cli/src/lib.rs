//! File formats, the universal-polynomial cache, seeded samples and the `lambdak` command line.

pub mod acceptance;
pub mod cache;
pub mod commands;
pub mod error;
pub mod formats;
pub mod samples;

pub use commands::run;
