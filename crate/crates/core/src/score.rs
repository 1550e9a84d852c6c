use crate::error::{DecisionError, Result};
use crate::matrix::NormalizedMatrix;
use crate::weights::WeightVector;

/// `V_i = sum_j w_j * r_ij`, summed in criterion order.
pub fn weighted_sum(normalized: &NormalizedMatrix, weights: &WeightVector) -> Result<Vec<f64>> {
    if weights.len() != normalized.n_criteria() {
        return Err(DecisionError::DimensionMismatch {
            context: "weight vector",
            expected: normalized.n_criteria(),
            found: weights.len(),
        });
    }
    Ok(normalized
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .zip(weights.as_slice())
                .fold(0.0, |acc, (r, w)| acc + w * r)
        })
        .collect())
}
