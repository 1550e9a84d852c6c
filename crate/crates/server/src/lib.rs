//! JSON HTTP front end over the applicant registry and the selection
//! pipeline.
//!
//! Public routes: `POST /api/applicants`, `GET /api/periods/{year}/recipients`
//! and `POST /api/login`. Everything else needs `Authorization: Bearer <token>`.
//! Period routes take an optional `?kind=` (default `bidik-misi`).

pub mod auth;
pub mod error;
mod handlers;
pub mod views;

use std::sync::Arc;

use axum::routing::{get, post};
use axum::Router;
use chrono::Duration;
use fmadm_registry::Store;

pub use auth::{Credentials, SessionToken, Sessions};
pub use error::{ApiError, Problem};
pub use fmadm_registry::{IneligibleRow, RankingView, RunRow};
pub use views::{RecipientsView, SelectionView, WhatIfView};

#[derive(Clone)]
pub struct AppState {
    pub store: Arc<Store>,
    pub sessions: Arc<Sessions>,
}

impl AppState {
    pub fn new(store: Store, credentials: Credentials, token_ttl: Duration) -> Self {
        AppState {
            store: Arc::new(store),
            sessions: Arc::new(Sessions::new(credentials, token_ttl)),
        }
    }
}

pub fn router(state: AppState) -> Router {
    use handlers::*;
    Router::new()
        .route("/api/login", post(login))
        .route("/api/logout", post(logout))
        .route("/api/applicants", post(register))
        .route("/api/criteria", get(criteria))
        .route("/api/periods", get(list_periods).post(create_period))
        .route("/api/periods/{year}", get(get_period).patch(update_period))
        .route("/api/periods/{year}/applicants", get(list_applicants))
        .route("/api/periods/{year}/selection", get(latest_selection).post(run_selection))
        .route("/api/periods/{year}/recipients", get(recipients))
        .route("/api/whatif", post(whatif))
        .with_state(state)
}
