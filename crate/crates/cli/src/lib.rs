//! Plant-definition ingestion, validation, run orchestration and report
//! emission for the flowsheet simulator.
//!
//! A plant definition is a single JSON document (UTF-8) describing the
//! component table, feed streams, unit-operation blocks, tear streams,
//! solver options, vessel specs and the economics inputs. [`definition`]
//! owns the schema and validation, [`build`] turns a validated definition
//! into core solver inputs, [`runner`] executes a run and [`report`]
//! writes the artifacts.

pub mod build;
pub mod definition;
pub mod report;
pub mod runner;

pub use definition::{
    load_definition, validate_definition, validate_path, Diagnostic, PlantDefinition,
};
pub use runner::{run, RunError, RunOptions, RunSummary};
