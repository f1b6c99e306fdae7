//! Benchmarking infrastructure for automated unit-test generators.
//!
//! Generators are driven through `runtool` adapters ([`protocol`],
//! [`orchestrator`]), their suites measured ([`metrics`]), scored
//! ([`scoring`]) and ranked ([`stats`]). [`toybench`] provides a small subject
//! language with exact coverage and mutation semantics.

pub mod benchselect;
pub mod cli;
pub mod config;
pub mod metrics;
pub mod orchestrator;
pub mod parallel;
pub mod protocol;
pub mod scoring;
pub mod stats;
pub mod toybench;
