use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{DecisionError, Result};

/// Absolute tolerance on `|sum(w) - 1|`.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "issue", rename_all = "snake_case")]
pub enum WeightIssue {
    Negative { index: usize, value: f64 },
    NonFinite { index: usize },
    SumNotOne { sum: f64 },
    Empty,
}

impl fmt::Display for WeightIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightIssue::Negative { index, value } => {
                write!(f, "weight {} is negative ({value})", index + 1)
            }
            WeightIssue::NonFinite { index } => write!(f, "weight {} is not finite", index + 1),
            WeightIssue::SumNotOne { sum } => write!(f, "weights sum to {sum}, expected 1"),
            WeightIssue::Empty => write!(f, "weight vector is empty"),
        }
    }
}

/// Empty iff every weight is finite and non-negative and the sum is 1
/// within [`WEIGHT_SUM_TOLERANCE`].
pub fn validate_weights(weights: &[f64]) -> Vec<WeightIssue> {
    if weights.is_empty() {
        return vec![WeightIssue::Empty];
    }
    let mut issues = Vec::new();
    for (index, &value) in weights.iter().enumerate() {
        if !value.is_finite() {
            issues.push(WeightIssue::NonFinite { index });
        } else if value < 0.0 {
            issues.push(WeightIssue::Negative { index, value });
        }
    }
    let sum: f64 = weights.iter().sum();
    if !sum.is_finite() || (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
        issues.push(WeightIssue::SumNotOne { sum });
    }
    issues
}

/// A validated weight vector, aligned to a criteria set by position.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        let issues = validate_weights(&weights);
        if issues.is_empty() {
            Ok(WeightVector(weights))
        } else {
            Err(DecisionError::InvalidWeights(issues))
        }
    }

    /// C1 nilai 40%, C2 income 30%, C3 dependents 10%, C4 semester 20%.
    pub fn bidik_misi() -> Self {
        WeightVector(vec![0.40, 0.30, 0.10, 0.20])
    }

    /// Parse a comma-separated list such as `0.4,0.3,0.1,0.2`.
    pub fn parse_list(text: &str) -> Result<Self> {
        let weights = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|e| DecisionError::Parse(format!("weight {:?}: {e}", s.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(weights)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl<'de> Deserialize<'de> for WeightVector {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = Vec::<f64>::deserialize(deserializer)?;
        WeightVector::new(raw).map_err(serde::de::Error::custom)
    }
}
