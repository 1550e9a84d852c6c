//! Fuzzy multiple-attribute decision making with Simple Additive Weighting.
//!
//! Raw attribute values are converted to crisp scores on a five-level fuzzy
//! scale through interval tables, assembled into a decision matrix,
//! normalized per criterion (benefit `x / max`, cost `min / x`), combined
//! into weighted sums and ranked under a deterministic total order.
//!
//! ```
//! use fmadm_core::{run_selection, CriteriaSet, RawAlternative};
//!
//! let criteria = CriteriaSet::bidik_misi();
//! let weights = criteria.weights().unwrap();
//! let pool = vec![
//!     RawAlternative::new("A", vec![3.55, 1_500_000.0, 4.0, 4.0]),
//!     RawAlternative::new("B", vec![3.01, 6_000_000.0, 4.0, 6.0]),
//! ];
//! let outcome = run_selection(&pool, &criteria, &weights, Some(1)).unwrap();
//! assert_eq!(outcome.recipients[0].id, "A");
//! ```

pub mod criteria;
pub mod error;
pub mod fuzzy;
pub mod matrix;
pub mod pipeline;
pub mod ranking;
pub mod score;
pub mod table;
pub mod weights;

pub use criteria::{fuzzify, ConfigIssue, CriteriaSet, CriterionKind, CriterionSpec, BIDIK_MISI_JSON};
pub use error::{DecisionError, Result};
pub use fuzzy::FuzzyLevel;
pub use matrix::{
    build_matrix, normalize, screen, DecisionMatrix, DomainViolation, Ineligible, NormalizedMatrix,
    RawAlternative, Screening,
};
pub use pipeline::{evaluate, run_selection, Evaluation, SelectionOutcome};
pub use ranking::{rank, select, RankedAlternative, Ranking, SCORE_TIE_TOLERANCE};
pub use score::weighted_sum;
pub use table::{ConversionTable, Domain, Interval, LookupError, TableIssue};
pub use weights::{validate_weights, WeightIssue, WeightVector, WEIGHT_SUM_TOLERANCE};
