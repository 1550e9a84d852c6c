//! Decision matrix assembly and normalization.

use serde::{Deserialize, Serialize};

use crate::criteria::{CriteriaSet, CriterionKind};
use crate::error::{DecisionError, Result};

/// One alternative's raw attribute values, aligned to a criteria set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RawAlternative {
    pub id: String,
    pub values: Vec<f64>,
}

impl RawAlternative {
    pub fn new(id: impl Into<String>, values: Vec<f64>) -> Self {
        RawAlternative {
            id: id.into(),
            values,
        }
    }
}

/// Crisp scores `x_ij`, one row per alternative in input order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionMatrix {
    alternatives: Vec<String>,
    criteria: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl DecisionMatrix {
    /// Rows must all have one cell per criterion.
    pub fn new(alternatives: Vec<String>, criteria: Vec<String>, rows: Vec<Vec<f64>>) -> Result<Self> {
        if rows.len() != alternatives.len() {
            return Err(DecisionError::DimensionMismatch {
                context: "matrix rows",
                expected: alternatives.len(),
                found: rows.len(),
            });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != criteria.len()) {
            return Err(DecisionError::DimensionMismatch {
                context: "matrix columns",
                expected: criteria.len(),
                found: bad.len(),
            });
        }
        Ok(DecisionMatrix {
            alternatives,
            criteria,
            rows,
        })
    }

    pub fn empty(criteria: Vec<String>) -> Self {
        DecisionMatrix {
            alternatives: Vec::new(),
            criteria,
            rows: Vec::new(),
        }
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[String] {
        &self.criteria
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.rows[i]
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = f64> + '_ {
        self.rows.iter().map(move |r| r[j])
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.rows[i][j]
    }

    pub fn n_alternatives(&self) -> usize {
        self.alternatives.len()
    }

    pub fn n_criteria(&self) -> usize {
        self.criteria.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alternatives.is_empty()
    }
}

/// Ratings `r_ij` in `(0, 1]`, same shape and labels as the source matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalizedMatrix {
    alternatives: Vec<String>,
    criteria: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl NormalizedMatrix {
    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[String] {
        &self.criteria
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.rows[i][j]
    }

    pub fn n_criteria(&self) -> usize {
        self.criteria.len()
    }
}

/// A raw value that no interval of its criterion's table accepts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DomainViolation {
    pub criterion: String,
    pub value: f64,
}

/// An alternative excluded from scoring, with every offending value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ineligible {
    pub id: String,
    pub violations: Vec<DomainViolation>,
}

/// Eligible alternatives fuzzified into a matrix, plus the excluded ones.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Screening {
    pub matrix: DecisionMatrix,
    /// Input positions of the matrix rows.
    pub source_rows: Vec<usize>,
    pub ineligible: Vec<Ineligible>,
}

fn fuzzify_row(alt: &RawAlternative, criteria: &CriteriaSet) -> Result<Vec<std::result::Result<f64, DomainViolation>>> {
    if alt.values.len() != criteria.len() {
        return Err(DecisionError::DimensionMismatch {
            context: "raw attribute values",
            expected: criteria.len(),
            found: alt.values.len(),
        });
    }
    criteria
        .criteria
        .iter()
        .zip(&alt.values)
        .map(|(c, &raw)| match c.fuzzify(raw) {
            Ok(level) => Ok(Ok(level.as_f64())),
            Err(DecisionError::OutOfDomain { criterion, value, .. }) => {
                Ok(Err(DomainViolation { criterion, value }))
            }
            Err(other) => Err(other),
        })
        .collect()
}

/// Fuzzify every alternative; the first out-of-domain value aborts the build.
pub fn build_matrix(alternatives: &[RawAlternative], criteria: &CriteriaSet) -> Result<DecisionMatrix> {
    let mut rows = Vec::with_capacity(alternatives.len());
    for alt in alternatives {
        let mut row = Vec::with_capacity(criteria.len());
        for cell in fuzzify_row(alt, criteria)? {
            match cell {
                Ok(x) => row.push(x),
                Err(DomainViolation { criterion, value }) => {
                    return Err(DecisionError::OutOfDomain {
                        alternative: Some(alt.id.clone()),
                        criterion,
                        value,
                    })
                }
            }
        }
        rows.push(row);
    }
    DecisionMatrix::new(
        alternatives.iter().map(|a| a.id.clone()).collect(),
        criteria.ids(),
        rows,
    )
}

/// Like [`build_matrix`], but out-of-domain alternatives are set aside
/// instead of failing the whole batch.
pub fn screen(alternatives: &[RawAlternative], criteria: &CriteriaSet) -> Result<Screening> {
    let mut ids = Vec::new();
    let mut rows = Vec::new();
    let mut source_rows = Vec::new();
    let mut ineligible = Vec::new();
    for (index, alt) in alternatives.iter().enumerate() {
        let cells = fuzzify_row(alt, criteria)?;
        let violations: Vec<DomainViolation> = cells.iter().filter_map(|c| c.clone().err()).collect();
        if violations.is_empty() {
            ids.push(alt.id.clone());
            rows.push(cells.into_iter().map(|c| c.expect("checked")).collect());
            source_rows.push(index);
        } else {
            ineligible.push(Ineligible {
                id: alt.id.clone(),
                violations,
            });
        }
    }
    Ok(Screening {
        matrix: DecisionMatrix::new(ids, criteria.ids(), rows)?,
        source_rows,
        ineligible,
    })
}

/// Benefit columns become `x / max`, cost columns `min / x`.
pub fn normalize(matrix: &DecisionMatrix, kinds: &[CriterionKind]) -> Result<NormalizedMatrix> {
    if matrix.is_empty() {
        return Err(DecisionError::EmptyMatrix);
    }
    if kinds.len() != matrix.n_criteria() {
        return Err(DecisionError::DimensionMismatch {
            context: "criterion kinds",
            expected: matrix.n_criteria(),
            found: kinds.len(),
        });
    }
    let mut rows = vec![vec![0.0; matrix.n_criteria()]; matrix.n_alternatives()];
    for (j, kind) in kinds.iter().enumerate() {
        if matrix.column(j).any(|x| !x.is_finite() || x <= 0.0) {
            return Err(DecisionError::DegenerateColumn {
                criterion: matrix.criteria[j].clone(),
            });
        }
        match kind {
            CriterionKind::Benefit => {
                let max = matrix.column(j).fold(f64::NEG_INFINITY, f64::max);
                for (i, row) in rows.iter_mut().enumerate() {
                    row[j] = matrix.get(i, j) / max;
                }
            }
            CriterionKind::Cost => {
                let min = matrix.column(j).fold(f64::INFINITY, f64::min);
                for (i, row) in rows.iter_mut().enumerate() {
                    row[j] = min / matrix.get(i, j);
                }
            }
        }
    }
    Ok(NormalizedMatrix {
        alternatives: matrix.alternatives.clone(),
        criteria: matrix.criteria.clone(),
        rows,
    })
}
