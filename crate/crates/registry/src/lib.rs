//! Applicant registry and selection-run persistence.
//!
//! Holds the three record kinds of the selection workflow: applicants
//! (pemohon), selection runs (seleksi) and the recipients each run names
//! (penerima beasiswa).

pub mod applicant;
pub mod error;
pub mod ingest;
pub mod report;
pub mod store;

pub use applicant::{parse_money, to_alternatives, ApplicantRecord, FieldError};
pub use error::{RegistryError, Result};
pub use report::{IneligibleRow, RankingView, RunRow};
pub use ingest::{ingest_applicants_csv, IngestError, IngestReport, RowError, CANONICAL_COLUMNS};
pub use store::{
    recipient_rows, slugify, PeriodDocument, PeriodKey, PeriodStatus, RecipientRow, RunId, RunRecord,
    SelectionPeriod, SelectionRun, Store, DEFAULT_KIND, RUN_SCHEMA,
};
