//! Gist API clients: live HTTP and fixture replay.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Duration;

use chrono::{DateTime, SecondsFormat, Utc};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Environment variable holding the API token.
pub const TOKEN_ENV: &str = "SNIPHARNESS_API_TOKEN";
pub const DEFAULT_API_BASE: &str = "https://api.github.com";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GistFile {
    pub filename: String,
    #[serde(default)]
    pub language: Option<String>,
    #[serde(default)]
    pub raw_url: Option<String>,
    #[serde(default)]
    pub size: Option<u64>,
    #[serde(default)]
    pub content: Option<String>,
    #[serde(default)]
    pub truncated: bool,
}

/// A gist as returned by the listing and fetch endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GistSummary {
    pub id: String,
    pub created_at: DateTime<Utc>,
    #[serde(default)]
    pub html_url: String,
    #[serde(default)]
    pub files: BTreeMap<String, GistFile>,
    /// Not part of the public listing; replay fixtures and mirrors may supply it.
    #[serde(default)]
    pub stars: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApiError {
    #[error("rate limited")]
    RateLimited { retry_after: Option<Duration> },
    #[error("HTTP {status}: {message}")]
    Http { status: u16, message: String },
    #[error("gist `{0}` not found")]
    NotFound(String),
    #[error("transport error: {0}")]
    Transport(String),
    #[error("cannot decode response: {0}")]
    Decode(String),
}

impl ApiError {
    /// Whether retrying the same request can succeed.
    pub fn is_transient(&self) -> bool {
        match self {
            ApiError::RateLimited { .. } | ApiError::Transport(_) => true,
            ApiError::Http { status, .. } => *status >= 500,
            ApiError::NotFound(_) | ApiError::Decode(_) => false,
        }
    }
}

/// Access to public gists.
///
/// `list_public` returns gists created at or after `since` in ascending
/// creation order, `per_page` at a time, pages numbered from 1. An empty page
/// means the listing is exhausted.
pub trait ApiClient: Send + Sync {
    fn list_public(
        &self,
        since: DateTime<Utc>,
        page: u32,
        per_page: u32,
    ) -> Result<Vec<GistSummary>, ApiError>;
    fn fetch(&self, id: &str) -> Result<GistSummary, ApiError>;
}

pub fn iso8601(t: DateTime<Utc>) -> String {
    t.to_rfc3339_opts(SecondsFormat::Secs, true)
}

/// Live REST client.
#[derive(Debug)]
pub struct HttpClient {
    base_url: String,
    token: Option<String>,
    http: reqwest::blocking::Client,
}

impl HttpClient {
    /// Client for `base_url`, reading the token from `SNIPHARNESS_API_TOKEN`.
    pub fn new(base_url: impl Into<String>) -> Result<Self, ApiError> {
        let http = reqwest::blocking::Client::builder()
            .user_agent(concat!("snipharness/", env!("CARGO_PKG_VERSION")))
            .timeout(Duration::from_secs(60))
            .build()
            .map_err(|e| ApiError::Transport(e.to_string()))?;
        Ok(HttpClient {
            base_url: base_url.into().trim_end_matches('/').to_string(),
            token: std::env::var(TOKEN_ENV).ok().filter(|t| !t.is_empty()),
            http,
        })
    }

    fn get<T: serde::de::DeserializeOwned>(
        &self,
        url: &str,
        not_found_id: &str,
    ) -> Result<T, ApiError> {
        let mut request = self
            .http
            .get(url)
            .header("Accept", "application/vnd.github+json");
        if let Some(token) = &self.token {
            request = request.bearer_auth(token);
        }
        let response = request
            .send()
            .map_err(|e| ApiError::Transport(e.to_string()))?;
        let status = response.status().as_u16();
        let header = |name: &str| {
            response
                .headers()
                .get(name)
                .and_then(|v| v.to_str().ok())
                .and_then(|v| v.trim().parse::<i64>().ok())
        };
        if status == 429 || (status == 403 && header("x-ratelimit-remaining") == Some(0)) {
            let retry_after = header("retry-after")
                .map(|s| Duration::from_secs(s.max(0) as u64))
                .or_else(|| {
                    header("x-ratelimit-reset").map(|reset| {
                        Duration::from_secs((reset - Utc::now().timestamp()).max(0) as u64)
                    })
                });
            return Err(ApiError::RateLimited { retry_after });
        }
        if status == 404 {
            return Err(ApiError::NotFound(not_found_id.to_string()));
        }
        if !(200..300).contains(&status) {
            let message = response.text().unwrap_or_default();
            return Err(ApiError::Http {
                status,
                message: message.chars().take(200).collect(),
            });
        }
        response.json().map_err(|e| ApiError::Decode(e.to_string()))
    }
}

impl ApiClient for HttpClient {
    fn list_public(
        &self,
        since: DateTime<Utc>,
        page: u32,
        per_page: u32,
    ) -> Result<Vec<GistSummary>, ApiError> {
        let url = format!(
            "{}/gists/public?since={}&page={page}&per_page={per_page}",
            self.base_url,
            iso8601(since)
        );
        self.get(&url, "")
    }

    fn fetch(&self, id: &str) -> Result<GistSummary, ApiError> {
        self.get(&format!("{}/gists/{id}", self.base_url), id)
    }
}

/// Request half of a recorded exchange.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RecordedRequest {
    List {
        since: DateTime<Utc>,
        page: u32,
        per_page: u32,
    },
    Fetch {
        id: String,
    },
}

/// One numbered fixture file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RecordedExchange {
    pub request: RecordedRequest,
    #[serde(default = "ok_status")]
    pub status: u16,
    #[serde(default)]
    pub body: serde_json::Value,
}

fn ok_status() -> u16 {
    200
}

#[derive(Debug, Error)]
pub enum ReplayError {
    #[error("cannot read replay fixture {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed replay fixture {path}: {source}")]
    Malformed {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

/// Serves canned responses from a directory of `*.json` exchange files,
/// read in file-name order. Repeated requests step through their recorded
/// responses and then keep returning the last one; a listing request with no
/// recording returns an empty page.
#[derive(Debug)]
pub struct ReplayClient {
    exchanges: HashMap<RecordedRequest, Vec<RecordedExchange>>,
    served: Mutex<HashMap<RecordedRequest, usize>>,
}

impl ReplayClient {
    pub fn from_dir(dir: &Path) -> Result<Self, ReplayError> {
        let io = |source| ReplayError::Io {
            path: dir.to_path_buf(),
            source,
        };
        let mut paths: Vec<PathBuf> = fs::read_dir(dir)
            .map_err(io)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|e| e == "json"))
            .collect();
        paths.sort();
        let mut exchanges = Vec::with_capacity(paths.len());
        for path in paths {
            let text = fs::read_to_string(&path).map_err(|source| ReplayError::Io {
                path: path.clone(),
                source,
            })?;
            let exchange = serde_json::from_str(&text)
                .map_err(|source| ReplayError::Malformed { path, source })?;
            exchanges.push(exchange);
        }
        Ok(ReplayClient::from_exchanges(exchanges))
    }

    pub fn from_exchanges(list: Vec<RecordedExchange>) -> Self {
        let mut exchanges: HashMap<RecordedRequest, Vec<RecordedExchange>> = HashMap::new();
        for exchange in list {
            exchanges
                .entry(exchange.request.clone())
                .or_default()
                .push(exchange);
        }
        ReplayClient {
            exchanges,
            served: Mutex::new(HashMap::new()),
        }
    }

    fn respond(&self, request: RecordedRequest) -> Option<RecordedExchange> {
        let recorded = self.exchanges.get(&request)?;
        let mut served = self.served.lock().unwrap_or_else(|e| e.into_inner());
        let n = served.entry(request).or_default();
        let exchange = recorded[(*n).min(recorded.len() - 1)].clone();
        *n += 1;
        Some(exchange)
    }
}

fn decode<T: serde::de::DeserializeOwned>(
    exchange: RecordedExchange,
    id: &str,
) -> Result<T, ApiError> {
    match exchange.status {
        200..=299 => {
            serde_json::from_value(exchange.body).map_err(|e| ApiError::Decode(e.to_string()))
        }
        429 => Err(ApiError::RateLimited { retry_after: None }),
        404 => Err(ApiError::NotFound(id.to_string())),
        status => Err(ApiError::Http {
            status,
            message: exchange.body.to_string(),
        }),
    }
}

impl ApiClient for ReplayClient {
    fn list_public(
        &self,
        since: DateTime<Utc>,
        page: u32,
        per_page: u32,
    ) -> Result<Vec<GistSummary>, ApiError> {
        match self.respond(RecordedRequest::List {
            since,
            page,
            per_page,
        }) {
            Some(exchange) => decode(exchange, ""),
            None => Ok(Vec::new()),
        }
    }

    fn fetch(&self, id: &str) -> Result<GistSummary, ApiError> {
        match self.respond(RecordedRequest::Fetch { id: id.to_string() }) {
            Some(exchange) => decode(exchange, id),
            None => Err(ApiError::NotFound(id.to_string())),
        }
    }
}
