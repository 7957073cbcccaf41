//! Experiment harness for the cuckoo search crates: benchmark campaigns,
//! convergence traces and the five case studies, all emitting deterministic
//! CSV files.

pub mod campaign;
pub mod cases;
pub mod config;
pub mod format;

pub use campaign::{emit_trace, run_campaign, CampaignOutput, SummaryRow, TrialRow};
pub use cases::{run_case, CaseReport, CaseRun, CASE_RUNS};
pub use config::{Algorithm, CaseName, ConfigError, ExperimentConfig};
