//! Per-applicant views of a run, shared by the service and the CLI.

use fmadm_core::DomainViolation;
use serde::{Deserialize, Serialize};

use crate::store::{recipient_rows, RecipientRow, RunRecord};

/// One applicant of a run: crisp and normalized rows plus the final score.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRow {
    pub nim: String,
    pub name: String,
    pub crisp: Vec<f64>,
    pub normalized: Vec<f64>,
    pub score: f64,
    pub rank: usize,
    pub recipient: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IneligibleRow {
    pub nim: String,
    pub name: String,
    pub violations: Vec<DomainViolation>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankingView {
    pub criteria: Vec<String>,
    pub weights: Vec<f64>,
    pub quota: Option<usize>,
    /// Rank order.
    pub rows: Vec<RunRow>,
    pub recipients: Vec<RecipientRow>,
    pub ineligible: Vec<IneligibleRow>,
    pub tie_break_applied: Vec<bool>,
}

impl RankingView {
    pub fn from_record(record: &RunRecord) -> Self {
        let out = &record.outcome;
        let name_of = |nim: &str| {
            record
                .applicants
                .iter()
                .find(|a| a.nim == nim)
                .map(|a| a.name.clone())
                .unwrap_or_default()
        };
        let rows = out
            .ranking
            .entries
            .iter()
            .map(|e| RunRow {
                nim: e.id.clone(),
                name: name_of(&e.id),
                crisp: out.crisp.row(e.index).to_vec(),
                normalized: out.normalized.row(e.index).to_vec(),
                score: e.score,
                rank: e.rank,
                recipient: out.is_recipient(&e.id),
            })
            .collect();
        let ineligible = out
            .ineligible
            .iter()
            .map(|i| IneligibleRow {
                nim: i.id.clone(),
                name: name_of(&i.id),
                violations: i.violations.clone(),
            })
            .collect();
        RankingView {
            criteria: record.criteria.ids(),
            weights: record.weights.clone(),
            quota: record.quota,
            rows,
            recipients: recipient_rows(record),
            ineligible,
            tie_break_applied: out.ranking.tie_break_applied.clone(),
        }
    }
}
