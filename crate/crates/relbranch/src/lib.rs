//! Command-line front end and JSON/CSV records for `relbranch-core`.

pub mod cli;
pub mod commands;
pub mod range;
pub mod record;

pub use record::{OutputRecord, SCHEMA};
