//! File formats, reports and the `plunnecke` command line on top of
//! `plunnecke-core`.
//!
//! Exit codes: 0 when every check holds, 1 when a check is violated (or the
//! min-cut and enumeration solvers disagree), 2 for invalid input.

pub mod cli;
pub mod formats;
pub mod report;

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] plunnecke_core::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("violation: {0}")]
    Violation(String),
}

impl LabError {
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Violation(_) => 1,
            _ => 2,
        }
    }
}
