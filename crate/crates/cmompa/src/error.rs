use thiserror::Error;

/// Errors surfaced by problem construction, optimizer runs, and file I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("objective {index} evaluated to a non-finite value ({value}) at position {position:?}")]
    NonFiniteObjective {
        index: usize,
        value: f64,
        position: Vec<f64>,
    },

    #[error("constraint violation evaluated to a non-finite or negative value ({value})")]
    InvalidViolation { value: f64 },

    #[error("unknown benchmark '{0}' (expected e.g. zdt1, dtlz2, wfg4)")]
    UnknownBenchmark(String),

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("stats input: {0}")]
    StatsInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
