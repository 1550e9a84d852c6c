//! Problem documents: `{code, message, details}`.

use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use fmadm_core::DecisionError;
use fmadm_registry::RegistryError;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Problem {
    pub code: &'static str,
    pub message: String,
    pub details: Value,
}

#[derive(Debug)]
pub struct ApiError {
    pub status: StatusCode,
    pub problem: Problem,
}

impl ApiError {
    pub fn new(status: StatusCode, code: &'static str, message: impl Into<String>) -> Self {
        ApiError {
            status,
            problem: Problem {
                code,
                message: message.into(),
                details: Value::Null,
            },
        }
    }

    pub fn with_details(mut self, details: impl Serialize) -> Self {
        self.problem.details = serde_json::to_value(details).unwrap_or(Value::Null);
        self
    }

    pub fn unauthorized() -> Self {
        ApiError::new(StatusCode::UNAUTHORIZED, "unauthorized", "missing, invalid or expired token")
    }

    pub fn bad_request(message: impl Into<String>) -> Self {
        ApiError::new(StatusCode::BAD_REQUEST, "bad_request", message)
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(self.problem)).into_response()
    }
}

impl From<DecisionError> for ApiError {
    fn from(e: DecisionError) -> Self {
        let message = e.to_string();
        let unprocessable = StatusCode::UNPROCESSABLE_ENTITY;
        match e {
            DecisionError::NoEligibleAlternatives { ineligible } => {
                ApiError::new(unprocessable, "no_eligible_applicants", message).with_details(ineligible)
            }
            DecisionError::InvalidWeights(issues) => {
                ApiError::new(unprocessable, "invalid_weights", message).with_details(issues)
            }
            DecisionError::DimensionMismatch { expected, found, .. } => {
                ApiError::new(unprocessable, "dimension_mismatch", message)
                    .with_details(serde_json::json!({ "expected": expected, "found": found }))
            }
            DecisionError::InvalidCriteria(issues) => {
                ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "invalid_criteria", message).with_details(issues)
            }
            _ => ApiError::new(unprocessable, "decision_error", message),
        }
    }
}

impl From<RegistryError> for ApiError {
    fn from(e: RegistryError) -> Self {
        let message = e.to_string();
        match e {
            RegistryError::UnknownPeriod(_) => ApiError::new(StatusCode::NOT_FOUND, "unknown_period", message),
            RegistryError::RunNotFound(_) => ApiError::new(StatusCode::NOT_FOUND, "run_not_found", message),
            RegistryError::PeriodExists(_) => ApiError::new(StatusCode::CONFLICT, "period_exists", message),
            RegistryError::PeriodNotOpen { .. } => ApiError::new(StatusCode::CONFLICT, "period_not_open", message),
            RegistryError::PeriodClosed(_) => ApiError::new(StatusCode::CONFLICT, "period_closed", message),
            RegistryError::InvalidTransition { .. } => {
                ApiError::new(StatusCode::CONFLICT, "invalid_transition", message)
            }
            RegistryError::DuplicateNim { .. } => ApiError::new(StatusCode::CONFLICT, "duplicate_nim", message),
            RegistryError::NoRunYet(_) => ApiError::new(StatusCode::CONFLICT, "no_run_yet", message),
            RegistryError::InvalidApplicant(fields) => {
                ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, "invalid_applicant", message).with_details(fields)
            }
            RegistryError::Decision(d) => d.into(),
            RegistryError::UnknownAttribute(_) => {
                ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "invalid_criteria", message)
            }
            RegistryError::Io { .. } | RegistryError::StorageCorrupt { .. } => {
                ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "storage_error", message)
            }
        }
    }
}
