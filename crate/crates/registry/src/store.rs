//! File-backed persistence for periods, applicants and selection runs.
//!
//! Layout under the data root:
//!
//! ```text
//! <root>/criteria.json                         optional; bundled default otherwise
//! <root>/periods/<year>-<kind>/period.json     period metadata + applicant pool
//! <root>/periods/<year>-<kind>/runs/<seq>.json one immutable document per run
//! ```
//!
//! Documents are replaced by write-to-temp + rename, so readers never see a
//! partial file. Writes to one period are serialized through a per-period
//! lock; a run file is hard-linked into place, so an existing run is never
//! overwritten.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use chrono::{DateTime, Utc};
use fmadm_core::{run_selection, CriteriaSet, SelectionOutcome, WeightVector};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::applicant::{to_alternatives, ApplicantRecord};
use crate::error::{RegistryError, Result};

pub const RUN_SCHEMA: &str = "fmadm.run/v1";
pub const DEFAULT_KIND: &str = "bidik-misi";

/// `(year, scholarship kind)`. The kind is stored as a lowercase slug so
/// that "Bidik Misi" and "bidik-misi" name the same period.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PeriodKey {
    pub year: i32,
    pub kind: String,
}

pub fn slugify(kind: &str) -> String {
    let mut out = String::new();
    for c in kind.trim().chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c.to_ascii_lowercase());
        } else if !out.ends_with('-') && !out.is_empty() {
            out.push('-');
        }
    }
    while out.ends_with('-') {
        out.pop();
    }
    out
}

impl PeriodKey {
    pub fn new(year: i32, kind: &str) -> Self {
        PeriodKey {
            year,
            kind: slugify(kind),
        }
    }

    pub fn bidik_misi(year: i32) -> Self {
        Self::new(year, DEFAULT_KIND)
    }
}

impl fmt::Display for PeriodKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.year, self.kind)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PeriodStatus {
    Open,
    Selected,
    Closed,
}

impl PeriodStatus {
    /// open -> selected -> closed; selected -> selected is a re-run.
    pub fn can_move_to(self, next: PeriodStatus) -> bool {
        matches!(
            (self, next),
            (PeriodStatus::Open, PeriodStatus::Selected)
                | (PeriodStatus::Selected, PeriodStatus::Selected)
                | (PeriodStatus::Selected, PeriodStatus::Closed)
        ) || self == next
    }
}

impl fmt::Display for PeriodStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PeriodStatus::Open => "open",
            PeriodStatus::Selected => "selected",
            PeriodStatus::Closed => "closed",
        })
    }
}

impl FromStr for PeriodStatus {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "open" => Ok(PeriodStatus::Open),
            "selected" => Ok(PeriodStatus::Selected),
            "closed" => Ok(PeriodStatus::Closed),
            other => Err(format!("unknown status {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectionPeriod {
    pub year: i32,
    pub scholarship_kind: String,
    /// `None` selects every eligible applicant.
    pub quota: Option<usize>,
    pub status: PeriodStatus,
}

impl SelectionPeriod {
    pub fn key(&self) -> PeriodKey {
        PeriodKey::new(self.year, &self.scholarship_kind)
    }
}

/// Contents of `period.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeriodDocument {
    #[serde(flatten)]
    pub period: SelectionPeriod,
    /// Registration order.
    pub applicants: Vec<ApplicantRecord>,
}

/// Everything needed to reproduce a selection: inputs and every
/// intermediate table. Also the CLI's JSON output format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub criteria: CriteriaSet,
    pub weights: Vec<f64>,
    pub quota: Option<usize>,
    pub applicants: Vec<ApplicantRecord>,
    pub outcome: SelectionOutcome,
}

impl RunRecord {
    /// Run the selection pipeline over `applicants` and keep every input
    /// alongside the outcome.
    pub fn compute(
        criteria: &CriteriaSet,
        weights: &WeightVector,
        quota: Option<usize>,
        applicants: Vec<ApplicantRecord>,
    ) -> Result<Self> {
        let alternatives = to_alternatives(&applicants, criteria)?;
        let outcome = run_selection(&alternatives, criteria, weights, quota)?;
        Ok(RunRecord {
            criteria: criteria.clone(),
            weights: weights.as_slice().to_vec(),
            quota,
            applicants,
            outcome,
        })
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectionRun {
    pub period: PeriodKey,
    pub created_at: DateTime<Utc>,
    pub record: RunRecord,
}

/// A stored run: its period plus a 1-based sequence number.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RunId {
    pub period: PeriodKey,
    pub seq: u32,
}

impl fmt::Display for RunId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/run-{:06}", self.period, self.seq)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecipientRow {
    pub rank: usize,
    pub nim: String,
    pub name: String,
    pub nilai: Option<f64>,
    pub score: f64,
}

/// Recipients of `run` in rank order, joined back to applicant names.
pub fn recipient_rows(run: &RunRecord) -> Vec<RecipientRow> {
    run.outcome
        .recipients
        .iter()
        .map(|r| {
            let applicant = run.applicants.iter().find(|a| a.nim == r.id);
            RecipientRow {
                rank: r.rank,
                nim: r.id.clone(),
                name: applicant.map(|a| a.name.clone()).unwrap_or_default(),
                nilai: applicant.map(|a| a.nilai),
                score: r.score,
            }
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct RunDocument {
    schema: String,
    sha256: String,
    run: SelectionRun,
}

fn checksum(run: &SelectionRun) -> String {
    let bytes = serde_json::to_vec(run).expect("run serializes");
    hex::encode(Sha256::digest(&bytes))
}

pub struct Store {
    root: PathBuf,
    locks: Mutex<HashMap<PeriodKey, Arc<Mutex<()>>>>,
}

static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = path.with_file_name(format!(
        ".{}.{}.{}.tmp",
        path.file_name().unwrap_or_default().to_string_lossy(),
        std::process::id(),
        TMP_COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    fs::write(&tmp, bytes).map_err(|e| RegistryError::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| RegistryError::io(path, e))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let bytes = fs::read(path).map_err(|e| RegistryError::io(path, e))?;
    serde_json::from_slice(&bytes).map_err(|e| RegistryError::StorageCorrupt {
        path: path.to_path_buf(),
        reason: e.to_string(),
    })
}

impl Store {
    /// Open (creating if needed) a store rooted at `root`.
    pub fn open(root: impl Into<PathBuf>) -> Result<Self> {
        let root = root.into();
        let periods = root.join("periods");
        fs::create_dir_all(&periods).map_err(|e| RegistryError::io(&periods, e))?;
        Ok(Store {
            root,
            locks: Mutex::new(HashMap::new()),
        })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    fn period_dir(&self, key: &PeriodKey) -> PathBuf {
        self.root.join("periods").join(key.to_string())
    }

    fn period_path(&self, key: &PeriodKey) -> PathBuf {
        self.period_dir(key).join("period.json")
    }

    fn runs_dir(&self, key: &PeriodKey) -> PathBuf {
        self.period_dir(key).join("runs")
    }

    fn run_path(&self, id: &RunId) -> PathBuf {
        self.runs_dir(&id.period).join(format!("run-{:06}.json", id.seq))
    }

    fn lock(&self, key: &PeriodKey) -> Arc<Mutex<()>> {
        let mut locks = self.locks.lock().expect("lock table poisoned");
        locks.entry(key.clone()).or_default().clone()
    }

    /// Criteria in force: `<root>/criteria.json`, or the bundled default.
    pub fn criteria(&self) -> Result<CriteriaSet> {
        let path = self.root.join("criteria.json");
        if !path.exists() {
            return Ok(CriteriaSet::bidik_misi());
        }
        let text = fs::read_to_string(&path).map_err(|e| RegistryError::io(&path, e))?;
        Ok(CriteriaSet::from_json(&text)?.validated()?)
    }

    pub fn set_criteria(&self, criteria: &CriteriaSet) -> Result<()> {
        let criteria = criteria.clone().validated()?;
        write_atomic(
            &self.root.join("criteria.json"),
            criteria.to_json_pretty().as_bytes(),
        )
    }

    pub fn create_period(&self, year: i32, kind: &str, quota: Option<usize>) -> Result<SelectionPeriod> {
        let key = PeriodKey::new(year, kind);
        let lock = self.lock(&key);
        let _guard = lock.lock().expect("period lock poisoned");
        if self.period_path(&key).exists() {
            return Err(RegistryError::PeriodExists(key));
        }
        let dir = self.runs_dir(&key);
        fs::create_dir_all(&dir).map_err(|e| RegistryError::io(&dir, e))?;
        let doc = PeriodDocument {
            period: SelectionPeriod {
                year,
                scholarship_kind: key.kind.clone(),
                quota,
                status: PeriodStatus::Open,
            },
            applicants: Vec::new(),
        };
        self.write_period(&key, &doc)?;
        Ok(doc.period)
    }

    fn write_period(&self, key: &PeriodKey, doc: &PeriodDocument) -> Result<()> {
        let bytes = serde_json::to_vec_pretty(doc).expect("period serializes");
        write_atomic(&self.period_path(key), &bytes)
    }

    pub fn period_document(&self, key: &PeriodKey) -> Result<PeriodDocument> {
        let path = self.period_path(key);
        if !path.exists() {
            return Err(RegistryError::UnknownPeriod(key.clone()));
        }
        read_json(&path)
    }

    pub fn period(&self, key: &PeriodKey) -> Result<SelectionPeriod> {
        Ok(self.period_document(key)?.period)
    }

    pub fn applicants(&self, key: &PeriodKey) -> Result<Vec<ApplicantRecord>> {
        Ok(self.period_document(key)?.applicants)
    }

    /// All periods, ordered by year then kind.
    pub fn list_periods(&self) -> Result<Vec<SelectionPeriod>> {
        let dir = self.root.join("periods");
        let mut out = Vec::new();
        for entry in fs::read_dir(&dir).map_err(|e| RegistryError::io(&dir, e))? {
            let entry = entry.map_err(|e| RegistryError::io(&dir, e))?;
            let path = entry.path().join("period.json");
            if path.exists() {
                out.push(read_json::<PeriodDocument>(&path)?.period);
            }
        }
        out.sort_by_key(SelectionPeriod::key);
        Ok(out)
    }

    /// Change quota and/or status. Status follows open -> selected -> closed.
    pub fn update_period(
        &self,
        key: &PeriodKey,
        quota: Option<Option<usize>>,
        status: Option<PeriodStatus>,
    ) -> Result<SelectionPeriod> {
        let lock = self.lock(key);
        let _guard = lock.lock().expect("period lock poisoned");
        let mut doc = self.period_document(key)?;
        if let Some(next) = status {
            if !doc.period.status.can_move_to(next) {
                return Err(RegistryError::InvalidTransition {
                    from: doc.period.status,
                    to: next,
                });
            }
            doc.period.status = next;
        }
        if let Some(q) = quota {
            if doc.period.status == PeriodStatus::Closed {
                return Err(RegistryError::PeriodClosed(key.clone()));
            }
            doc.period.quota = q;
        }
        self.write_period(key, &doc)?;
        Ok(doc.period)
    }

    /// Register an applicant. Only open periods accept registrations.
    pub fn add_applicant(&self, key: &PeriodKey, record: ApplicantRecord) -> Result<ApplicantRecord> {
        let problems = record.validate();
        if !problems.is_empty() {
            return Err(RegistryError::InvalidApplicant(problems));
        }
        let lock = self.lock(key);
        let _guard = lock.lock().expect("period lock poisoned");
        let mut doc = self.period_document(key)?;
        if doc.period.status != PeriodStatus::Open {
            return Err(RegistryError::PeriodNotOpen {
                key: key.clone(),
                status: doc.period.status,
            });
        }
        if doc.applicants.iter().any(|a| a.nim == record.nim) {
            return Err(RegistryError::DuplicateNim {
                key: key.clone(),
                nim: record.nim,
            });
        }
        doc.applicants.push(record.clone());
        self.write_period(key, &doc)?;
        Ok(record)
    }

    /// Sequence numbers of stored runs, ascending.
    pub fn list_runs(&self, key: &PeriodKey) -> Result<Vec<RunId>> {
        if !self.period_path(key).exists() {
            return Err(RegistryError::UnknownPeriod(key.clone()));
        }
        let dir = self.runs_dir(key);
        if !dir.exists() {
            return Ok(Vec::new());
        }
        let mut seqs: Vec<u32> = fs::read_dir(&dir)
            .map_err(|e| RegistryError::io(&dir, e))?
            .filter_map(|e| e.ok())
            .filter_map(|e| {
                let name = e.file_name().to_string_lossy().into_owned();
                name.strip_prefix("run-")?.strip_suffix(".json")?.parse().ok()
            })
            .collect();
        seqs.sort_unstable();
        Ok(seqs
            .into_iter()
            .map(|seq| RunId {
                period: key.clone(),
                seq,
            })
            .collect())
    }

    fn append_run(&self, run: &SelectionRun) -> Result<RunId> {
        let key = &run.period;
        let seq = self.list_runs(key)?.last().map_or(1, |id| id.seq + 1);
        let id = RunId {
            period: key.clone(),
            seq,
        };
        let doc = RunDocument {
            schema: RUN_SCHEMA.to_string(),
            sha256: checksum(run),
            run: run.clone(),
        };
        let bytes = serde_json::to_vec_pretty(&doc).expect("run serializes");
        let path = self.run_path(&id);
        let dir = self.runs_dir(key);
        fs::create_dir_all(&dir).map_err(|e| RegistryError::io(&dir, e))?;
        let tmp = dir.join(format!(".run-{:06}.{}.tmp", seq, std::process::id()));
        fs::write(&tmp, &bytes).map_err(|e| RegistryError::io(&tmp, e))?;
        // hard_link fails if the target exists, so a run file is never replaced
        fs::hard_link(&tmp, &path).map_err(|e| RegistryError::io(&path, e))?;
        fs::remove_file(&tmp).map_err(|e| RegistryError::io(&tmp, e))?;
        Ok(id)
    }

    /// Append a run to its period's history.
    pub fn save_run(&self, run: &SelectionRun) -> Result<RunId> {
        let lock = self.lock(&run.period);
        let _guard = lock.lock().expect("period lock poisoned");
        self.append_run(run)
    }

    /// Append a run and mark the period selected, as one step under the
    /// period lock. Closed periods refuse new runs.
    pub fn record_selection(&self, run: &SelectionRun) -> Result<RunId> {
        let key = &run.period;
        let lock = self.lock(key);
        let _guard = lock.lock().expect("period lock poisoned");
        let mut doc = self.period_document(key)?;
        if doc.period.status == PeriodStatus::Closed {
            return Err(RegistryError::PeriodClosed(key.clone()));
        }
        let id = self.append_run(run)?;
        if doc.period.status != PeriodStatus::Selected {
            doc.period.status = PeriodStatus::Selected;
            self.write_period(key, &doc)?;
        }
        Ok(id)
    }

    /// Run the pipeline over the period's current pool with the stored
    /// criteria and the period quota, then record the run. The pool is read
    /// and the run appended under one lock; a failed pipeline writes nothing.
    pub fn run_selection(&self, key: &PeriodKey, created_at: DateTime<Utc>) -> Result<(RunId, SelectionRun)> {
        let lock = self.lock(key);
        let _guard = lock.lock().expect("period lock poisoned");
        let mut doc = self.period_document(key)?;
        if doc.period.status == PeriodStatus::Closed {
            return Err(RegistryError::PeriodClosed(key.clone()));
        }
        let criteria = self.criteria()?;
        let weights = criteria.weights()?;
        let record = RunRecord::compute(&criteria, &weights, doc.period.quota, doc.applicants.clone())?;
        let run = SelectionRun {
            period: key.clone(),
            created_at,
            record,
        };
        let id = self.append_run(&run)?;
        if doc.period.status != PeriodStatus::Selected {
            doc.period.status = PeriodStatus::Selected;
            self.write_period(key, &doc)?;
        }
        Ok((id, run))
    }

    pub fn load_run(&self, id: &RunId) -> Result<SelectionRun> {
        if !self.period_path(&id.period).exists() {
            return Err(RegistryError::UnknownPeriod(id.period.clone()));
        }
        let path = self.run_path(id);
        if !path.exists() {
            return Err(RegistryError::RunNotFound(id.clone()));
        }
        let doc: RunDocument = read_json(&path)?;
        let corrupt = |reason: String| RegistryError::StorageCorrupt {
            path: path.clone(),
            reason,
        };
        if doc.schema != RUN_SCHEMA {
            return Err(corrupt(format!("schema {:?}, expected {RUN_SCHEMA:?}", doc.schema)));
        }
        if checksum(&doc.run) != doc.sha256 {
            return Err(corrupt("checksum mismatch".into()));
        }
        if doc.run.period != id.period {
            return Err(corrupt(format!("run belongs to period {}", doc.run.period)));
        }
        Ok(doc.run)
    }

    pub fn latest_run(&self, key: &PeriodKey) -> Result<(RunId, SelectionRun)> {
        let id = self
            .list_runs(key)?
            .pop()
            .ok_or_else(|| RegistryError::NoRunYet(key.clone()))?;
        let run = self.load_run(&id)?;
        Ok((id, run))
    }

    /// Recipients of the latest run, in rank order.
    pub fn list_recipients(&self, year: i32, kind: &str) -> Result<Vec<RecipientRow>> {
        let (_, run) = self.latest_run(&PeriodKey::new(year, kind))?;
        Ok(recipient_rows(&run.record))
    }
}
