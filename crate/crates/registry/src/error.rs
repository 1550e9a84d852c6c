use std::path::PathBuf;

use fmadm_core::DecisionError;
use thiserror::Error;

use crate::applicant::FieldError;
use crate::store::{PeriodKey, PeriodStatus, RunId};

#[derive(Debug, Error)]
pub enum RegistryError {
    #[error("I/O error at {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("stored document {} is corrupt: {reason}", path.display())]
    StorageCorrupt { path: PathBuf, reason: String },

    #[error("unknown period {0}")]
    UnknownPeriod(PeriodKey),

    #[error("period {0} already exists")]
    PeriodExists(PeriodKey),

    #[error("period {key} is {status}, not open")]
    PeriodNotOpen { key: PeriodKey, status: PeriodStatus },

    #[error("period {0} is closed")]
    PeriodClosed(PeriodKey),

    #[error("cannot move period from {from} to {to}")]
    InvalidTransition { from: PeriodStatus, to: PeriodStatus },

    #[error("nim {nim} is already registered in period {key}")]
    DuplicateNim { key: PeriodKey, nim: String },

    #[error("period {0} has no selection run yet")]
    NoRunYet(PeriodKey),

    #[error("run {0} not found")]
    RunNotFound(RunId),

    #[error("invalid applicant: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    InvalidApplicant(Vec<FieldError>),

    #[error("criterion attribute {0:?} is not an applicant field")]
    UnknownAttribute(String),

    #[error(transparent)]
    Decision(#[from] DecisionError),
}

impl RegistryError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        RegistryError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = RegistryError> = std::result::Result<T, E>;
