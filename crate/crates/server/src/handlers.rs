use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::IntoResponse;
use axum::Json;
use chrono::Utc;
use fmadm_core::WeightVector;
use fmadm_registry::{
    recipient_rows, ApplicantRecord, PeriodKey, PeriodStatus, RankingView, RegistryError, RunRecord, DEFAULT_KIND,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer};
use serde_json::Value;

use crate::auth::Admin;
use crate::error::ApiError;
use crate::views::{RecipientsView, SelectionView, WhatIfView};
use crate::AppState;

type ApiResult<T> = Result<T, ApiError>;

fn parse<T: DeserializeOwned>(body: &Bytes) -> ApiResult<T> {
    serde_json::from_slice(body).map_err(|e| ApiError::bad_request(format!("malformed request body: {e}")))
}

#[derive(Deserialize)]
pub struct KindQuery {
    kind: Option<String>,
}

impl KindQuery {
    fn key(&self, year: i32) -> PeriodKey {
        PeriodKey::new(year, self.kind.as_deref().unwrap_or(DEFAULT_KIND))
    }
}

#[derive(Deserialize)]
struct LoginRequest {
    username: String,
    password: String,
}

pub async fn login(State(state): State<AppState>, body: Bytes) -> ApiResult<impl IntoResponse> {
    let req: LoginRequest = parse(&body)?;
    state
        .sessions
        .login(&req.username, &req.password)
        .map(Json)
        .ok_or_else(|| ApiError::new(StatusCode::UNAUTHORIZED, "invalid_credentials", "bad username or password"))
}

pub async fn logout(Admin(token): Admin, State(state): State<AppState>) -> StatusCode {
    state.sessions.logout(&token);
    StatusCode::NO_CONTENT
}

pub async fn register(
    State(state): State<AppState>,
    Query(q): Query<KindQuery>,
    body: Bytes,
) -> ApiResult<impl IntoResponse> {
    let value: Value = parse(&body)?;
    let record = ApplicantRecord::from_json(&value).map_err(RegistryError::InvalidApplicant)?;
    let key = q.key(record.period_year);
    let stored = state.store.add_applicant(&key, record)?;
    Ok((StatusCode::CREATED, Json(stored)))
}

pub async fn list_periods(_: Admin, State(state): State<AppState>) -> ApiResult<impl IntoResponse> {
    Ok(Json(state.store.list_periods()?))
}

#[derive(Deserialize)]
struct CreatePeriod {
    year: i32,
    #[serde(default)]
    scholarship_kind: Option<String>,
    #[serde(default)]
    quota: Option<usize>,
}

pub async fn create_period(_: Admin, State(state): State<AppState>, body: Bytes) -> ApiResult<impl IntoResponse> {
    let req: CreatePeriod = parse(&body)?;
    let kind = req.scholarship_kind.as_deref().unwrap_or(DEFAULT_KIND);
    let period = state.store.create_period(req.year, kind, req.quota)?;
    Ok((StatusCode::CREATED, Json(period)))
}

pub async fn get_period(
    _: Admin,
    State(state): State<AppState>,
    Path(year): Path<i32>,
    Query(q): Query<KindQuery>,
) -> ApiResult<impl IntoResponse> {
    Ok(Json(state.store.period(&q.key(year))?))
}

fn present<'de, D: Deserializer<'de>, T: Deserialize<'de>>(d: D) -> Result<Option<T>, D::Error> {
    T::deserialize(d).map(Some)
}

#[derive(Deserialize)]
struct UpdatePeriod {
    /// Absent leaves the quota alone; `null` means every eligible applicant.
    #[serde(default, deserialize_with = "present")]
    quota: Option<Option<usize>>,
    #[serde(default)]
    status: Option<PeriodStatus>,
}

pub async fn update_period(
    _: Admin,
    State(state): State<AppState>,
    Path(year): Path<i32>,
    Query(q): Query<KindQuery>,
    body: Bytes,
) -> ApiResult<impl IntoResponse> {
    let req: UpdatePeriod = parse(&body)?;
    Ok(Json(state.store.update_period(&q.key(year), req.quota, req.status)?))
}

pub async fn list_applicants(
    _: Admin,
    State(state): State<AppState>,
    Path(year): Path<i32>,
    Query(q): Query<KindQuery>,
) -> ApiResult<impl IntoResponse> {
    Ok(Json(state.store.applicants(&q.key(year))?))
}

pub async fn run_selection(
    _: Admin,
    State(state): State<AppState>,
    Path(year): Path<i32>,
    Query(q): Query<KindQuery>,
) -> ApiResult<impl IntoResponse> {
    let (id, run) = state.store.run_selection(&q.key(year), Utc::now())?;
    Ok(Json(SelectionView::new(&id, run)))
}

pub async fn latest_selection(
    _: Admin,
    State(state): State<AppState>,
    Path(year): Path<i32>,
    Query(q): Query<KindQuery>,
) -> ApiResult<impl IntoResponse> {
    let (id, run) = state.store.latest_run(&q.key(year))?;
    Ok(Json(SelectionView::new(&id, run)))
}

pub async fn recipients(
    State(state): State<AppState>,
    Path(year): Path<i32>,
    Query(q): Query<KindQuery>,
) -> ApiResult<impl IntoResponse> {
    let (id, run) = state.store.latest_run(&q.key(year))?;
    Ok(Json(RecipientsView {
        run: id.to_string(),
        recipients: recipient_rows(&run.record),
        period: run.period,
    }))
}

#[derive(Deserialize)]
struct WhatIfRequest {
    year: i32,
    #[serde(default)]
    kind: Option<String>,
    weights: Vec<f64>,
    #[serde(default)]
    quota: Option<usize>,
}

pub async fn whatif(_: Admin, State(state): State<AppState>, body: Bytes) -> ApiResult<impl IntoResponse> {
    let req: WhatIfRequest = parse(&body)?;
    let weights = WeightVector::new(req.weights)?;
    let key = PeriodKey::new(req.year, req.kind.as_deref().unwrap_or(DEFAULT_KIND));
    let doc = state.store.period_document(&key)?;
    let criteria = state.store.criteria()?;
    let quota = req.quota.or(doc.period.quota);
    let record = RunRecord::compute(&criteria, &weights, quota, doc.applicants)?;
    Ok(Json(WhatIfView {
        period: key,
        ranking: RankingView::from_record(&record),
    }))
}

pub async fn criteria(_: Admin, State(state): State<AppState>) -> ApiResult<impl IntoResponse> {
    Ok(Json(state.store.criteria()?))
}
