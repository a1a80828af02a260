use std::path::PathBuf;

use hecke_forge_core::Error as CoreError;

/// A document that parses as JSON but does not describe a valid object.
#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{0}")]
    Value(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

#[derive(Debug, thiserror::Error)]
pub enum ForgeError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("malformed document: {0}")]
    Format(#[from] FormatError),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl ForgeError {
    /// Process exit status: 3 for a singular specialization, 2 for every
    /// other error. Relation violations are not errors and map to 1 elsewhere.
    pub fn exit_code(&self) -> i32 {
        let singular = |e: &CoreError| matches!(e, CoreError::SingularSpecialization { .. });
        match self {
            ForgeError::Core(e) | ForgeError::Format(FormatError::Core(e)) if singular(e) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, ForgeError>;
