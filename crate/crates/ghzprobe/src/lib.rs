//! Command-line tooling for `ghzprobe-core`: geometry files, reports,
//! reproducible random trials and the verification harness.

pub mod cli;
pub mod error;
pub mod geometry_file;
pub mod json;
pub mod report;
pub mod rng;
pub mod verify;

pub use error::{AppError, AppResult};
