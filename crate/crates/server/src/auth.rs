//! Single admin account and bearer sessions.

use std::collections::HashMap;
use std::sync::Mutex;

use axum::extract::FromRequestParts;
use axum::http::header::AUTHORIZATION;
use axum::http::request::Parts;
use base64::engine::general_purpose::URL_SAFE_NO_PAD;
use base64::Engine;
use chrono::{DateTime, Duration, Utc};
use rand::rngs::OsRng;
use rand::RngCore;
use serde::Serialize;
use subtle::ConstantTimeEq;

use crate::error::ApiError;
use crate::AppState;

#[derive(Debug, Clone)]
pub struct Credentials {
    pub username: String,
    pub password: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SessionToken {
    pub token: String,
    pub expires_at: DateTime<Utc>,
}

pub struct Sessions {
    credentials: Credentials,
    ttl: Duration,
    live: Mutex<HashMap<String, DateTime<Utc>>>,
}

fn same(a: &str, b: &str) -> bool {
    a.as_bytes().ct_eq(b.as_bytes()).into()
}

impl Sessions {
    pub fn new(credentials: Credentials, ttl: Duration) -> Self {
        Sessions {
            credentials,
            ttl,
            live: Mutex::new(HashMap::new()),
        }
    }

    /// Issue a token if both fields match. Both comparisons always run.
    pub fn login(&self, username: &str, password: &str) -> Option<SessionToken> {
        let user_ok = same(username, &self.credentials.username);
        let pass_ok = same(password, &self.credentials.password);
        if !(user_ok & pass_ok) {
            return None;
        }
        let mut bytes = [0u8; 16];
        OsRng.fill_bytes(&mut bytes);
        let token = URL_SAFE_NO_PAD.encode(bytes);
        let expires_at = Utc::now() + self.ttl;
        let mut live = self.live.lock().expect("session table poisoned");
        let now = Utc::now();
        live.retain(|_, exp| *exp > now);
        live.insert(token.clone(), expires_at);
        Some(SessionToken { token, expires_at })
    }

    pub fn is_valid(&self, token: &str) -> bool {
        let mut live = self.live.lock().expect("session table poisoned");
        match live.get(token) {
            Some(exp) if *exp > Utc::now() => true,
            Some(_) => {
                live.remove(token);
                false
            }
            None => false,
        }
    }

    pub fn logout(&self, token: &str) -> bool {
        let mut live = self.live.lock().expect("session table poisoned");
        live.remove(token).is_some_and(|exp| exp > Utc::now())
    }
}

fn bearer(parts: &Parts) -> Option<&str> {
    let value = parts.headers.get(AUTHORIZATION)?.to_str().ok()?;
    let (scheme, token) = value.split_once(' ')?;
    scheme.eq_ignore_ascii_case("bearer").then(|| token.trim())
}

/// Extractor for admin-only handlers. Holds the caller's token.
pub struct Admin(pub String);

impl FromRequestParts<AppState> for Admin {
    type Rejection = ApiError;

    async fn from_request_parts(parts: &mut Parts, state: &AppState) -> Result<Self, Self::Rejection> {
        match bearer(parts) {
            Some(token) if state.sessions.is_valid(token) => Ok(Admin(token.to_string())),
            _ => Err(ApiError::unauthorized()),
        }
    }
}
