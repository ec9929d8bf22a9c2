use std::path::PathBuf;

/// Failures of the command-line layer.
#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] ghzprobe_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("geometry file {path}: {source}")]
    GeometryFile {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("serializing report: {0}")]
    Json(#[from] serde_json::Error),
    #[error("writing csv: {0}")]
    Csv(#[from] csv::Error),
}

impl AppError {
    /// 2 for bad input, 3 for internal consistency failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Core(e) if e.is_internal_consistency() => 3,
            AppError::Json(_) | AppError::Csv(_) => 3,
            _ => 2,
        }
    }
}

pub type AppResult<T> = std::result::Result<T, AppError>;
