//! CLI error type carrying the process exit code.

use foilsim_core::Error as CoreError;
use std::fmt;

/// Exit codes: 0 success, 1 validation error, 2 assumption-check failure,
/// 3 I/O error.
#[derive(Debug)]
pub enum AppError {
    Validation(String),
    Assumption(String),
    Io(String),
}

impl AppError {
    pub fn validation(msg: impl Into<String>) -> Self {
        AppError::Validation(msg.into())
    }

    pub fn assumption(msg: impl Into<String>) -> Self {
        AppError::Assumption(msg.into())
    }

    pub fn io(path: &std::path::Path, err: &std::io::Error) -> Self {
        AppError::Io(format!("{}: {err}", path.display()))
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            AppError::Validation(_) => 1,
            AppError::Assumption(_) => 2,
            AppError::Io(_) => 3,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Validation(m) => write!(f, "validation error: {m}"),
            AppError::Assumption(m) => write!(f, "assumption check failed: {m}"),
            AppError::Io(m) => write!(f, "I/O error: {m}"),
        }
    }
}

impl From<CoreError> for AppError {
    fn from(err: CoreError) -> Self {
        match err {
            CoreError::PulseAssumption { .. } => AppError::Assumption(err.to_string()),
            other => AppError::Validation(other.to_string()),
        }
    }
}
