//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by geometry, oracle, algorithm, and harness code.
#[derive(Debug, Error)]
pub enum Error {
    /// A point handed to an operation lies outside the feasible set.
    #[error("point is not in the feasible set (violation {violation:.3e})")]
    InfeasiblePoint { violation: f64 },

    /// The regularization scale must be strictly positive.
    #[error("beta must be positive, got {0}")]
    NonpositiveBeta(f64),

    /// A tabulated schedule ran out of entries.
    #[error("schedule exhausted: no entry for index {0}")]
    ScheduleExhausted(usize),

    /// Algorithm and geometry (or problem and geometry) do not fit together.
    #[error("geometry mismatch: {0}")]
    GeometryMismatch(String),

    /// A check was asked for a trajectory mode it does not apply to.
    #[error("mode mismatch: {0}")]
    ModeMismatch(String),

    /// The inertia coefficient vanishes at this time; the dynamics are
    /// algebraic there and cannot be integrated.
    #[error("inertia coefficient vanishes at t = {t}; start at a positive offset")]
    SingularTime { t: f64 },

    /// Integration produced a non-finite component.
    #[error("state became non-finite at t = {time}")]
    NonfiniteState { time: f64 },

    /// A finite-difference check needs more samples than the trajectory has.
    #[error("trajectory too short: need at least {needed} samples, got {got}")]
    InsufficientGrid { needed: usize, got: usize },

    /// A parameter failed basic validation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The configuration text could not be parsed.
    #[error("config parse error: {0}")]
    ConfigParse(String),

    /// The configuration parsed but violates a constraint.
    #[error("config validation error: {0}")]
    ConfigInvalid(String),

    /// A CSV file handed to `report` does not match the expected schema.
    #[error("csv format error: {0}")]
    CsvFormat(String),

    /// A replication failed; carries which run it was.
    #[error("run {run_id} failed: {source}")]
    RunFailed {
        run_id: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
