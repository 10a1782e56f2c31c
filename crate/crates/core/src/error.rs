use std::path::PathBuf;

use crate::estimator::RunResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("degenerate schedule: iteration bound T = {iterations_bound} must exceed 1")]
    DegenerateSchedule { iterations_bound: f64 },

    #[error("amplitude {value} is outside [{min}, {max}]")]
    AmplitudeOutOfRange { value: f64, min: f64, max: f64 },

    #[error("shift {shift} is outside [-1/2, 1/2]; the shifted oracle needs arccos(2b)")]
    ShiftOutOfRange { shift: f64 },

    #[error("shots must be at least 1")]
    ZeroShots,

    #[error("statevector has {actual} qubits, circuit expects {expected}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("qubit count {0} is outside the supported range 2..=20")]
    QubitCount(usize),

    #[error("estimator exceeded {limit} iterations without converging")]
    IterationLimit { limit: usize, trace: Box<RunResult> },

    #[error("property `{property}` violated: {detail}\n{trace}")]
    PropertyViolation {
        property: &'static str,
        detail: String,
        trace: String,
    },

    #[error("config: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> Error {
        let path = path.into();
        move |source| Error::Io { path, source }
    }
}
