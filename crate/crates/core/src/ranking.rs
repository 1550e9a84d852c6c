//! Deterministic total order over scored alternatives.
//!
//! Order: score descending, then tie key (the first criterion's crisp value)
//! descending, then id ascending, then input position. Scores within
//! [`SCORE_TIE_TOLERANCE`] of their neighbour in score order form one tie
//! group; the secondary keys only reorder inside a group.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{DecisionError, Result};

pub const SCORE_TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedAlternative {
    pub id: String,
    pub score: f64,
    /// 1-based and gap-free.
    pub rank: usize,
    /// Position in the scored input.
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ranking {
    pub entries: Vec<RankedAlternative>,
    /// `tie_break_applied[k]` is set when entries `k` and `k + 1` had equal
    /// scores and were ordered by the secondary keys.
    pub tie_break_applied: Vec<bool>,
}

impl Ranking {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn ids(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.id.as_str()).collect()
    }

    /// Rank of the alternative at input position `index`.
    pub fn rank_of_index(&self, index: usize) -> Option<usize> {
        self.entries.iter().find(|e| e.index == index).map(|e| e.rank)
    }
}

/// Rank alternatives by score; `tie_key` is each alternative's C1 crisp value.
pub fn rank(scores: &[f64], ids: &[String], tie_key: &[f64]) -> Result<Ranking> {
    if ids.len() != scores.len() {
        return Err(DecisionError::DimensionMismatch {
            context: "ranking ids",
            expected: scores.len(),
            found: ids.len(),
        });
    }
    if tie_key.len() != scores.len() {
        return Err(DecisionError::DimensionMismatch {
            context: "ranking tie keys",
            expected: scores.len(),
            found: tie_key.len(),
        });
    }
    if let Some(i) = scores.iter().position(|s| !s.is_finite()) {
        return Err(DecisionError::NonFiniteScore {
            alternative: ids[i].clone(),
        });
    }

    let mut by_score: Vec<usize> = (0..scores.len()).collect();
    by_score.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));

    let mut order = Vec::with_capacity(scores.len());
    let mut tie_break_applied = Vec::with_capacity(scores.len().saturating_sub(1));
    let mut start = 0;
    while start < by_score.len() {
        let mut end = start + 1;
        while end < by_score.len()
            && scores[by_score[end - 1]] - scores[by_score[end]] <= SCORE_TIE_TOLERANCE
        {
            end += 1;
        }
        let group = &mut by_score[start..end];
        group.sort_by(|&a, &b| secondary(a, b, ids, tie_key));
        order.extend_from_slice(group);
        tie_break_applied.extend(std::iter::repeat_n(true, end - start - 1));
        if end < by_score.len() {
            tie_break_applied.push(false);
        }
        start = end;
    }

    let entries = order
        .into_iter()
        .enumerate()
        .map(|(pos, index)| RankedAlternative {
            id: ids[index].clone(),
            score: scores[index],
            rank: pos + 1,
            index,
        })
        .collect();
    Ok(Ranking {
        entries,
        tie_break_applied,
    })
}

fn secondary(a: usize, b: usize, ids: &[String], tie_key: &[f64]) -> Ordering {
    tie_key[b]
        .total_cmp(&tie_key[a])
        .then_with(|| ids[a].cmp(&ids[b]))
        .then(a.cmp(&b))
}

/// The first `min(quota, n)` entries in rank order.
pub fn select(ranking: &Ranking, quota: usize) -> Vec<RankedAlternative> {
    ranking.entries.iter().take(quota).cloned().collect()
}
