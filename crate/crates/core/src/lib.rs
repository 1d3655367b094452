//! Sparsity measures reformulated as ratios of multivariate power means,
//! dimensionless health indexes built from them, and the full run-to-failure
//! analysis pipeline: envelope preprocessing, first-fault-occurrence-time
//! detection, isolation-forest degradation staging and kurtogram-guided
//! incipient-fault diagnosis.

pub mod attributes;
pub mod datasets;
pub mod detect;
pub mod error;
pub mod health_index;
pub mod iforest;
pub mod kurtogram;
pub mod mpmf;
pub mod sigprep;
pub mod sparsity;
pub mod stats;

pub use error::{Error, Result};
