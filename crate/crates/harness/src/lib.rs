//! Seeded suite runner for the `hilbert-axioms` checks.
//!
//! A [`SuiteConfig`] selects a model, a dimension range, a trial count, a
//! seed and a tolerance; [`run_suites`] evaluates the selected suites and
//! returns a [`Report`] that depends on nothing but the config, apart from
//! its wall-time field.

pub mod config;
pub mod report;
pub mod run;
pub mod text;

pub use config::{parse_suites, ConfigError, DimRange, Model, Outcome, SuiteConfig, SuiteId};
pub use report::{Counterexample, Format, MorphismRecord, Report, SuiteReport};
pub use run::{run_suites, RunError, PINNED_SEARCH_BOUND};
