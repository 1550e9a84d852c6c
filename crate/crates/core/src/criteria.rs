//! Criteria configuration: which attributes are scored, how they convert to
//! crisp values, and how much each one weighs.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{DecisionError, Result};
use crate::fuzzy::FuzzyLevel;
use crate::table::{ConversionTable, LookupError, TableIssue};
use crate::weights::{validate_weights, WeightIssue, WeightVector};

/// Bundled configuration: nilai, parental income, dependents, semester.
pub const BIDIK_MISI_JSON: &str = include_str!("../config/bidik_misi.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CriterionKind {
    /// Larger crisp values are better; normalized as `x / max`.
    Benefit,
    /// Smaller crisp values are better; normalized as `min / x`.
    Cost,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionSpec {
    pub id: String,
    pub name: String,
    pub kind: CriterionKind,
    /// Name of the raw applicant attribute this criterion reads.
    pub attribute: String,
    pub weight: f64,
    #[serde(flatten)]
    pub table: ConversionTable,
}

impl CriterionSpec {
    pub fn fuzzify(&self, raw: f64) -> Result<FuzzyLevel> {
        self.table.lookup(raw).map_err(|e| match e {
            LookupError::OutOfDomain => DecisionError::OutOfDomain {
                alternative: None,
                criterion: self.id.clone(),
                value: raw,
            },
            LookupError::IllegalCrisp(value) => DecisionError::IllegalCrisp {
                criterion: self.id.clone(),
                value,
            },
        })
    }
}

/// Map a raw value to its crisp score under `criterion`'s table.
pub fn fuzzify(criterion: &CriterionSpec, raw: f64) -> Result<FuzzyLevel> {
    criterion.fuzzify(raw)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "issue", rename_all = "snake_case")]
pub enum ConfigIssue {
    NoCriteria,
    EmptyId { index: usize },
    DuplicateId { id: String },
    Table { criterion: String, detail: TableIssue },
    Weights { detail: WeightIssue },
}

impl fmt::Display for ConfigIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigIssue::NoCriteria => write!(f, "no criteria defined"),
            ConfigIssue::EmptyId { index } => write!(f, "criterion #{} has an empty id", index + 1),
            ConfigIssue::DuplicateId { id } => write!(f, "criterion id {id} is used more than once"),
            ConfigIssue::Table { criterion, detail } => write!(f, "{criterion}: {detail}"),
            ConfigIssue::Weights { detail } => write!(f, "weights: {detail}"),
        }
    }
}

/// An ordered list of criteria. Column `j` of every matrix built from this
/// set corresponds to `criteria[j]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriteriaSet {
    pub criteria: Vec<CriterionSpec>,
}

impl CriteriaSet {
    pub fn new(criteria: Vec<CriterionSpec>) -> Self {
        CriteriaSet { criteria }
    }

    /// The bundled four-criterion configuration.
    pub fn bidik_misi() -> Self {
        Self::from_json(BIDIK_MISI_JSON).expect("bundled criteria config parses")
    }

    /// Parse a criteria document without validating it.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| DecisionError::Parse(e.to_string()))
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("criteria serialize")
    }

    /// Every table gap/overlap/illegal value, duplicate id and weight problem.
    pub fn validate(&self) -> Vec<ConfigIssue> {
        let mut issues = Vec::new();
        if self.criteria.is_empty() {
            issues.push(ConfigIssue::NoCriteria);
            return issues;
        }
        let mut seen = HashSet::new();
        for (index, c) in self.criteria.iter().enumerate() {
            if c.id.trim().is_empty() {
                issues.push(ConfigIssue::EmptyId { index });
            } else if !seen.insert(c.id.as_str()) {
                issues.push(ConfigIssue::DuplicateId { id: c.id.clone() });
            }
            issues.extend(c.table.validate().into_iter().map(|detail| ConfigIssue::Table {
                criterion: c.id.clone(),
                detail,
            }));
        }
        issues.extend(
            validate_weights(&self.weight_values())
                .into_iter()
                .map(|detail| ConfigIssue::Weights { detail }),
        );
        issues
    }

    pub fn validated(self) -> Result<Self> {
        let issues = self.validate();
        if issues.is_empty() {
            Ok(self)
        } else {
            Err(DecisionError::InvalidCriteria(issues))
        }
    }

    pub fn len(&self) -> usize {
        self.criteria.len()
    }

    pub fn is_empty(&self) -> bool {
        self.criteria.is_empty()
    }

    pub fn ids(&self) -> Vec<String> {
        self.criteria.iter().map(|c| c.id.clone()).collect()
    }

    pub fn kinds(&self) -> Vec<CriterionKind> {
        self.criteria.iter().map(|c| c.kind).collect()
    }

    pub fn weight_values(&self) -> Vec<f64> {
        self.criteria.iter().map(|c| c.weight).collect()
    }

    pub fn weights(&self) -> Result<WeightVector> {
        WeightVector::new(self.weight_values())
    }

    pub fn get(&self, id: &str) -> Option<&CriterionSpec> {
        self.criteria.iter().find(|c| c.id == id)
    }

    /// Copy with `weights` written into each criterion.
    pub fn with_weights(&self, weights: &WeightVector) -> Result<Self> {
        if weights.len() != self.len() {
            return Err(DecisionError::DimensionMismatch {
                context: "weight override",
                expected: self.len(),
                found: weights.len(),
            });
        }
        let mut out = self.clone();
        for (c, &w) in out.criteria.iter_mut().zip(weights.as_slice()) {
            c.weight = w;
        }
        Ok(out)
    }
}
