//! Response bodies built from stored runs.

use chrono::{DateTime, Utc};
use fmadm_registry::{PeriodKey, RankingView, RecipientRow, RunId, RunRecord, SelectionRun};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectionView {
    pub run: String,
    pub seq: u32,
    pub period: PeriodKey,
    pub created_at: DateTime<Utc>,
    #[serde(flatten)]
    pub ranking: RankingView,
    /// The stored run record, every input and intermediate table included.
    pub record: RunRecord,
}

impl SelectionView {
    pub fn new(id: &RunId, run: SelectionRun) -> Self {
        SelectionView {
            run: id.to_string(),
            seq: id.seq,
            period: run.period,
            created_at: run.created_at,
            ranking: RankingView::from_record(&run.record),
            record: run.record,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WhatIfView {
    pub period: PeriodKey,
    #[serde(flatten)]
    pub ranking: RankingView,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecipientsView {
    pub period: PeriodKey,
    pub run: String,
    pub recipients: Vec<RecipientRow>,
}
