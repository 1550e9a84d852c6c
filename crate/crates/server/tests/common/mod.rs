#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::Path;

use axum::body::Body;
use axum::http::{Method, Request, StatusCode};
use axum::Router;
use fmadm_registry::Store;
use fmadm_server::{router, AppState, Credentials};
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

pub const USER: &str = "admin";
pub const PASSWORD: &str = "rahasia-2013";

pub fn app(dir: &Path) -> Router {
    let store = Store::open(dir).unwrap();
    let creds = Credentials {
        username: USER.into(),
        password: PASSWORD.into(),
    };
    router(AppState::new(store, creds, chrono::Duration::minutes(30)))
}

pub async fn raw(app: &Router, method: Method, uri: &str, token: Option<&str>, body: Option<Value>) -> (StatusCode, Vec<u8>) {
    let mut req = Request::builder().method(method).uri(uri);
    if let Some(t) = token {
        req = req.header("authorization", format!("Bearer {t}"));
    }
    let req = match body {
        Some(v) => req
            .header("content-type", "application/json")
            .body(Body::from(serde_json::to_vec(&v).unwrap())),
        None => req.body(Body::empty()),
    }
    .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes().to_vec();
    (status, bytes)
}

pub async fn call(app: &Router, method: Method, uri: &str, token: Option<&str>, body: Option<Value>) -> (StatusCode, Value) {
    let (status, bytes) = raw(app, method, uri, token, body).await;
    let value = if bytes.is_empty() {
        Value::Null
    } else {
        serde_json::from_slice(&bytes).unwrap_or_else(|_| Value::String(String::from_utf8_lossy(&bytes).into()))
    };
    (status, value)
}

pub async fn login(app: &Router) -> String {
    let (status, body) = call(
        app,
        Method::POST,
        "/api/login",
        None,
        Some(json!({"username": USER, "password": PASSWORD})),
    )
    .await;
    assert_eq!(status, StatusCode::OK, "{body}");
    body["token"].as_str().unwrap().to_string()
}

pub fn applicant(nim: &str, name: &str, nilai: f64, income: Value, dependents: u32, semester: u32) -> Value {
    json!({
        "nim": nim,
        "name": name,
        "program": "Manajemen Informatika",
        "semester": semester,
        "period_year": 2013,
        "nilai": nilai,
        "income": income,
        "dependents": dependents,
    })
}

/// The three applicants whose crisp rows are (2,8,8,6), (2,4,8,10), (2,4,8,6).
pub fn three_applicants() -> Vec<Value> {
    vec![
        applicant("10145001", "Angga", 3.55, json!(1_500_000), 4, 4),
        applicant("0915110", "RODIAH", 3.01, json!("Rp6,000,000"), 4, 6),
        applicant("08141156", "SAGA", 3.25, json!(7_000_000), 4, 4),
    ]
}

/// Every file under `dir` with its bytes.
pub fn snapshot(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    let mut out = BTreeMap::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in std::fs::read_dir(&d).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let rel = path.strip_prefix(dir).unwrap().to_string_lossy().into_owned();
                out.insert(rel, std::fs::read(&path).unwrap());
            }
        }
    }
    out
}
