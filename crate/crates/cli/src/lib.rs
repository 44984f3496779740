//! Command-line front end: reads structure tensors as JSON, runs the
//! classifier, and generates fixtures.

pub mod commands;
pub mod document;
pub mod fixtures;
pub mod rng;

pub use commands::{CommandOutput, Options};
pub use document::{ReportDocument, TensorDocument};
pub use fixtures::Kind;
