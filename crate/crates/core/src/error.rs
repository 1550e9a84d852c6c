use thiserror::Error;

use crate::criteria::ConfigIssue;
use crate::matrix::Ineligible;
use crate::weights::WeightIssue;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DecisionError {
    #[error("{}value {value} for criterion {criterion} falls outside every interval of its table", alternative_prefix(.alternative))]
    OutOfDomain {
        alternative: Option<String>,
        criterion: String,
        value: f64,
    },

    #[error("criterion {criterion}: table maps to illegal crisp value {value}")]
    IllegalCrisp { criterion: String, value: f64 },

    #[error("criterion {criterion}: column cannot be normalized (non-positive or non-finite value)")]
    DegenerateColumn { criterion: String },

    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("decision matrix has no alternatives")]
    EmptyMatrix,

    #[error("invalid weight vector: {}", join(.0))]
    InvalidWeights(Vec<WeightIssue>),

    #[error("invalid criteria configuration: {}", join(.0))]
    InvalidCriteria(Vec<ConfigIssue>),

    #[error("no eligible alternatives ({} ineligible)", .ineligible.len())]
    NoEligibleAlternatives { ineligible: Vec<Ineligible> },

    #[error("score for {alternative} is not finite")]
    NonFiniteScore { alternative: String },

    #[error("criteria document could not be parsed: {0}")]
    Parse(String),
}

fn alternative_prefix(alternative: &Option<String>) -> String {
    alternative
        .as_ref()
        .map(|a| format!("alternative {a}: "))
        .unwrap_or_default()
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = DecisionError> = std::result::Result<T, E>;
