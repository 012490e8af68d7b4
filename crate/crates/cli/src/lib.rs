//! Document format, reports and commands behind the `toric-stability`
//! binary.

pub mod commands;
pub mod document;
pub mod report;
