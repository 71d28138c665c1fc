use thiserror::Error;

/// Errors raised by construction, validation, and iteration.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid value: {0}")]
    InvalidValue(String),

    #[error("schedule out of range at n = {n}: {detail}")]
    ScheduleOutOfRange { n: usize, detail: String },

    #[error("operator is not monotone: {0}")]
    NotMonotone(String),

    #[error("declared fixed point is not fixed: {0}")]
    FixedPointMismatch(String),

    #[error("infeasible constraint set: {0}")]
    Infeasible(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    /// True for errors caused by bad inputs or configuration, as opposed to
    /// numerical breakdown while iterating. Callers that need process exit
    /// codes map configuration errors to 2 and runtime failures to 3.
    pub fn is_config_error(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch { .. }
                | Error::InvalidValue(_)
                | Error::ScheduleOutOfRange { .. }
                | Error::NotMonotone(_)
                | Error::FixedPointMismatch(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
