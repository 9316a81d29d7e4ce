//! Experiment harness and reporting for the aircov placement library.

pub mod bench;
pub mod experiment;
pub mod report;
