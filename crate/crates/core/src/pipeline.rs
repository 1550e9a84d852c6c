//! The full fuzzify -> normalize -> weighted sum -> rank -> select chain.

use serde::{Deserialize, Serialize};

use crate::criteria::{CriteriaSet, CriterionKind};
use crate::error::{DecisionError, Result};
use crate::matrix::{normalize, screen, DecisionMatrix, Ineligible, NormalizedMatrix, RawAlternative};
use crate::ranking::{rank, select, RankedAlternative, Ranking};
use crate::score::weighted_sum;
use crate::weights::WeightVector;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub normalized: NormalizedMatrix,
    pub scores: Vec<f64>,
    pub ranking: Ranking,
}

/// Score and rank an already-fuzzified matrix. Ties are broken on column 0.
pub fn evaluate(matrix: &DecisionMatrix, kinds: &[CriterionKind], weights: &WeightVector) -> Result<Evaluation> {
    let normalized = normalize(matrix, kinds)?;
    let scores = weighted_sum(&normalized, weights)?;
    let tie_key: Vec<f64> = matrix.column(0).collect();
    let ranking = rank(&scores, matrix.alternatives(), &tie_key)?;
    Ok(Evaluation {
        normalized,
        scores,
        ranking,
    })
}

/// Everything a selection produces, intermediate tables included.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectionOutcome {
    pub crisp: DecisionMatrix,
    /// Input positions of the crisp matrix rows.
    pub source_rows: Vec<usize>,
    pub normalized: NormalizedMatrix,
    pub scores: Vec<f64>,
    pub ranking: Ranking,
    pub recipients: Vec<RankedAlternative>,
    pub ineligible: Vec<Ineligible>,
}

impl SelectionOutcome {
    pub fn is_recipient(&self, id: &str) -> bool {
        self.recipients.iter().any(|r| r.id == id)
    }
}

/// Run the whole chain over raw attribute values. `quota = None` selects
/// every eligible alternative.
pub fn run_selection(
    alternatives: &[RawAlternative],
    criteria: &CriteriaSet,
    weights: &WeightVector,
    quota: Option<usize>,
) -> Result<SelectionOutcome> {
    if weights.len() != criteria.len() {
        return Err(DecisionError::DimensionMismatch {
            context: "weight vector",
            expected: criteria.len(),
            found: weights.len(),
        });
    }
    let screening = screen(alternatives, criteria)?;
    if screening.matrix.is_empty() {
        return Err(DecisionError::NoEligibleAlternatives {
            ineligible: screening.ineligible,
        });
    }
    let Evaluation {
        normalized,
        scores,
        ranking,
    } = evaluate(&screening.matrix, &criteria.kinds(), weights)?;
    let recipients = select(&ranking, quota.unwrap_or(ranking.len()));
    Ok(SelectionOutcome {
        crisp: screening.matrix,
        source_rows: screening.source_rows,
        normalized,
        scores,
        ranking,
        recipients,
        ineligible: screening.ineligible,
    })
}
