//! Gist enumeration by creation-date windows.
//!
//! The public listing is paged and stops serving results after a fixed number
//! of records per query. When a window reaches that ceiling without covering
//! its whole time span it is split in half and each half is enumerated on its
//! own, so every window eventually fits under the ceiling or shrinks to one
//! second.

mod client;

use std::collections::HashSet;
use std::thread;
use std::time::Duration;

use chrono::{DateTime, TimeDelta, Utc};
use log::{debug, info, warn};
use thiserror::Error;

pub use client::{
    iso8601, ApiClient, ApiError, GistFile, GistSummary, HttpClient, RecordedExchange,
    RecordedRequest, ReplayClient, ReplayError, DEFAULT_API_BASE, TOKEN_ENV,
};

use crate::store::{is_valid_id, SnippetRecord, Store, StoreError};

/// Records the listing serves per query before it stops paginating.
pub const PAGINATION_CEILING: usize = 3000;
pub const MAX_PAGE_SIZE: u32 = 100;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MineQuery {
    pub language_tag: String,
    pub min_stars: u64,
    pub window_start: DateTime<Utc>,
    pub window_end: DateTime<Utc>,
    pub max_records: usize,
    pub page_size: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("window start {start} is not before window end {end}")]
    EmptyWindow { start: String, end: String },
    #[error("page size must be between 1 and {MAX_PAGE_SIZE}, got {0}")]
    PageSize(u32),
    #[error("max_records must be positive")]
    MaxRecords,
    #[error("language tag is empty")]
    Language,
}

impl MineQuery {
    pub fn validate(&self) -> Result<(), QueryError> {
        if self.window_start >= self.window_end {
            return Err(QueryError::EmptyWindow {
                start: iso8601(self.window_start),
                end: iso8601(self.window_end),
            });
        }
        if self.page_size == 0 || self.page_size > MAX_PAGE_SIZE {
            return Err(QueryError::PageSize(self.page_size));
        }
        if self.max_records == 0 {
            return Err(QueryError::MaxRecords);
        }
        if self.language_tag.trim().is_empty() {
            return Err(QueryError::Language);
        }
        Ok(())
    }
}

/// How transient API failures are retried.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RetryPolicy {
    pub retries: u32,
    pub initial_backoff: Duration,
}

impl Default for RetryPolicy {
    fn default() -> Self {
        RetryPolicy {
            retries: 3,
            initial_backoff: Duration::from_secs(1),
        }
    }
}

impl RetryPolicy {
    /// No sleeping between attempts. Meant for tests and replay runs.
    pub fn immediate() -> Self {
        RetryPolicy {
            retries: 3,
            initial_backoff: Duration::ZERO,
        }
    }

    fn call<T>(
        &self,
        what: &str,
        mut f: impl FnMut() -> Result<T, ApiError>,
    ) -> Result<T, ApiError> {
        let mut backoff = self.initial_backoff;
        let mut attempt = 0;
        loop {
            match f() {
                Ok(v) => return Ok(v),
                Err(e) if e.is_transient() && attempt < self.retries => {
                    attempt += 1;
                    let wait = match &e {
                        ApiError::RateLimited {
                            retry_after: Some(after),
                        } if !self.initial_backoff.is_zero() => (*after).max(backoff),
                        _ => backoff,
                    };
                    warn!("{what}: {e}; retry {attempt}/{} in {wait:?}", self.retries);
                    if !wait.is_zero() {
                        thread::sleep(wait);
                    }
                    backoff = backoff.saturating_mul(2);
                }
                Err(e) => return Err(e),
            }
        }
    }
}

/// Enumeration stopped by an API error. Records accepted before the failure
/// are kept in `partial`.
#[derive(Debug, Error)]
#[error("mining stopped after {} records: {error}", partial.len())]
pub struct MineError {
    pub partial: Vec<SnippetRecord>,
    #[source]
    pub error: ApiError,
}

/// Strategies for discovering gists.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum MineStrategy {
    /// Creation-date windows over the public listing.
    #[default]
    DateWindow,
    /// Keyword search through the web UI. Not implemented.
    Scrape,
}

#[derive(Debug, Error)]
pub enum MineFailureKind {
    #[error(transparent)]
    Query(#[from] QueryError),
    #[error(transparent)]
    Api(#[from] ApiError),
    #[error(transparent)]
    Store(#[from] StoreError),
    #[error("the scrape strategy is not implemented")]
    Unsupported,
}

/// `mine` failed. `stored` records were written before the failure.
#[derive(Debug, Error)]
#[error("{kind} ({stored} stored before failure)")]
pub struct MineFailure {
    pub stored: usize,
    #[source]
    pub kind: MineFailureKind,
}

/// Expected file extension for a language tag, when one is known.
fn expected_extension(language_tag: &str) -> Option<&'static str> {
    match language_tag.to_ascii_lowercase().as_str() {
        "python" => Some(".py"),
        _ => None,
    }
}

fn passes(gist: &GistSummary, query: &MineQuery) -> bool {
    if gist.files.len() != 1 || gist.stars < query.min_stars {
        return false;
    }
    let file = gist.files.values().next().expect("one file");
    let language_ok = file
        .language
        .as_deref()
        .is_some_and(|l| l.eq_ignore_ascii_case(query.language_tag.trim()));
    let extension_ok = expected_extension(&query.language_tag)
        .is_none_or(|ext| file.filename.to_ascii_lowercase().ends_with(ext));
    language_ok && extension_ok && is_valid_id(&gist.id)
}

fn to_record(gist: &GistSummary, query: &MineQuery) -> SnippetRecord {
    let file = gist.files.values().next().expect("one file");
    SnippetRecord {
        id: gist.id.clone(),
        filename: file.filename.clone(),
        source: file.content.clone().unwrap_or_default(),
        language_tag: file
            .language
            .clone()
            .unwrap_or_else(|| query.language_tag.clone()),
        stars: gist.stars,
        created_at: gist.created_at,
        origin_url: gist.html_url.clone(),
    }
}

/// Record for a fetched single-file gist with content, without applying the
/// language or star filters. Used to check out a gist by id.
pub fn single_file_record(gist: &GistSummary) -> Option<SnippetRecord> {
    let file = match gist.files.values().collect::<Vec<_>>().as_slice() {
        [file] if file.content.is_some() => *file,
        _ => return None,
    };
    is_valid_id(&gist.id).then(|| SnippetRecord {
        id: gist.id.clone(),
        filename: file.filename.clone(),
        source: file.content.clone().unwrap_or_default(),
        language_tag: file.language.clone().unwrap_or_default(),
        stars: gist.stars,
        created_at: gist.created_at,
        origin_url: gist.html_url.clone(),
    })
}

/// Keeps single-file gists whose file matches the language (tag and
/// extension) and that have at least `min_stars` stars. Order is preserved.
/// Source text is whatever the summaries carry.
pub fn apply_filters(candidates: &[GistSummary], query: &MineQuery) -> Vec<SnippetRecord> {
    candidates
        .iter()
        .filter(|g| passes(g, query))
        .map(|g| to_record(g, query))
        .collect()
}

enum Listing {
    Complete(Vec<GistSummary>),
    CeilingHit,
}

/// Pages through `[start, end)` until the listing runs past `end`, runs dry,
/// or reaches the ceiling.
fn list_window(
    client: &dyn ApiClient,
    retry: &RetryPolicy,
    start: DateTime<Utc>,
    end: DateTime<Utc>,
    page_size: u32,
) -> Result<Listing, ApiError> {
    let mut seen = 0usize;
    let mut inside = Vec::new();
    let mut page = 1u32;
    while seen < PAGINATION_CEILING {
        let batch = retry.call("list", || client.list_public(start, page, page_size))?;
        if batch.is_empty() {
            return Ok(Listing::Complete(inside));
        }
        seen += batch.len();
        let mut passed_end = false;
        for gist in batch {
            if gist.created_at >= end {
                passed_end = true;
            } else if gist.created_at >= start {
                inside.push(gist);
            }
        }
        if passed_end {
            return Ok(Listing::Complete(inside));
        }
        page += 1;
    }
    if end - start <= TimeDelta::seconds(1) {
        warn!(
            "window {} holds more than {PAGINATION_CEILING} gists and cannot be split further",
            iso8601(start)
        );
        return Ok(Listing::Complete(inside));
    }
    Ok(Listing::CeilingHit)
}

struct Enumeration<'a> {
    query: &'a MineQuery,
    client: &'a dyn ApiClient,
    retry: RetryPolicy,
    seen: HashSet<String>,
    out: Vec<SnippetRecord>,
}

impl Enumeration<'_> {
    fn full(&self) -> bool {
        self.out.len() >= self.query.max_records
    }

    fn window(&mut self, start: DateTime<Utc>, end: DateTime<Utc>) -> Result<(), ApiError> {
        if self.full() {
            return Ok(());
        }
        debug!("listing window {} .. {}", iso8601(start), iso8601(end));
        match list_window(self.client, &self.retry, start, end, self.query.page_size)? {
            Listing::CeilingHit => {
                let mid = start + (end - start) / 2;
                info!(
                    "window {} .. {} hit the ceiling; bisecting",
                    iso8601(start),
                    iso8601(end)
                );
                self.window(start, mid)?;
                self.window(mid, end)
            }
            Listing::Complete(gists) => {
                for gist in gists {
                    if self.full() {
                        break;
                    }
                    if !passes(&gist, self.query) || !self.seen.insert(gist.id.clone()) {
                        continue;
                    }
                    if let Some(record) = self.complete(gist)? {
                        self.out.push(record);
                    }
                }
                Ok(())
            }
        }
    }

    /// Fills in file content with a full fetch when the summary lacks it.
    fn complete(&self, gist: GistSummary) -> Result<Option<SnippetRecord>, ApiError> {
        let file = gist.files.values().next().expect("one file");
        if file.content.is_some() && !file.truncated {
            return Ok(Some(to_record(&gist, self.query)));
        }
        let full = match self.retry.call("fetch", || self.client.fetch(&gist.id)) {
            Ok(full) => full,
            Err(ApiError::NotFound(id)) => {
                warn!("gist {id} disappeared before it could be fetched; skipping");
                return Ok(None);
            }
            Err(e) => return Err(e),
        };
        // The listing's star count and metadata win; the fetch supplies content.
        let content = full.files.values().next().and_then(|f| f.content.clone());
        if full.files.len() != 1 || content.is_none() {
            warn!(
                "gist {} has no retrievable single-file content; skipping",
                gist.id
            );
            return Ok(None);
        }
        let mut record = to_record(&gist, self.query);
        record.source = content.unwrap_or_default();
        Ok(Some(record))
    }
}

/// Enumerates `[window_start, window_end)` and returns the accepted records
/// with their source text.
pub fn enumerate_window(
    query: &MineQuery,
    client: &dyn ApiClient,
) -> Result<Vec<SnippetRecord>, MineError> {
    enumerate_window_with(query, client, RetryPolicy::default())
}

pub fn enumerate_window_with(
    query: &MineQuery,
    client: &dyn ApiClient,
    retry: RetryPolicy,
) -> Result<Vec<SnippetRecord>, MineError> {
    let mut run = Enumeration {
        query,
        client,
        retry,
        seen: HashSet::new(),
        out: Vec::new(),
    };
    match run.window(query.window_start, query.window_end) {
        Ok(()) => Ok(run.out),
        Err(error) => Err(MineError {
            partial: run.out,
            error,
        }),
    }
}

/// Enumerates and persists. Reruns overwrite the same ids.
pub fn mine(
    query: &MineQuery,
    client: &dyn ApiClient,
    store: &Store,
) -> Result<usize, MineFailure> {
    mine_with(
        MineStrategy::DateWindow,
        query,
        client,
        store,
        RetryPolicy::default(),
    )
}

pub fn mine_with(
    strategy: MineStrategy,
    query: &MineQuery,
    client: &dyn ApiClient,
    store: &Store,
    retry: RetryPolicy,
) -> Result<usize, MineFailure> {
    let fail = |stored, kind| MineFailure { stored, kind };
    if strategy == MineStrategy::Scrape {
        return Err(fail(0, MineFailureKind::Unsupported));
    }
    query.validate().map_err(|e| fail(0, e.into()))?;
    let (records, api_error) = match enumerate_window_with(query, client, retry) {
        Ok(records) => (records, None),
        Err(MineError { partial, error }) => (partial, Some(error)),
    };
    let mut stored = 0;
    for record in &records {
        store
            .put_snippet(record)
            .map_err(|e| fail(stored, e.into()))?;
        stored += 1;
    }
    match api_error {
        Some(error) => Err(fail(stored, error.into())),
        None => Ok(stored),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use chrono::TimeZone;
    use proptest::prelude::*;
    use std::collections::BTreeMap;
    use std::sync::atomic::{AtomicUsize, Ordering};
    use std::sync::Mutex;

    fn t(secs: i64) -> DateTime<Utc> {
        Utc.timestamp_opt(1_500_000_000 + secs, 0).unwrap()
    }

    fn gist(id: &str, secs: i64, files: &[(&str, &str)], stars: u64) -> GistSummary {
        GistSummary {
            id: id.into(),
            created_at: t(secs),
            html_url: format!("https://gist.example/{id}"),
            files: files
                .iter()
                .map(|(name, lang)| {
                    (
                        name.to_string(),
                        GistFile {
                            filename: name.to_string(),
                            language: Some(lang.to_string()),
                            raw_url: None,
                            size: None,
                            content: Some(format!("# {id}\n")),
                            truncated: false,
                        },
                    )
                })
                .collect(),
            stars,
        }
    }

    fn query(start: i64, end: i64) -> MineQuery {
        MineQuery {
            language_tag: "Python".into(),
            min_stars: 1,
            window_start: t(start),
            window_end: t(end),
            max_records: usize::MAX,
            page_size: 100,
        }
    }

    /// In-memory listing over a sorted population, honouring the ceiling.
    struct Simulated {
        gists: Vec<GistSummary>,
        list_calls: Mutex<Vec<(DateTime<Utc>, u32)>>,
        fetches: AtomicUsize,
    }

    impl Simulated {
        fn new(mut gists: Vec<GistSummary>) -> Self {
            gists.sort_by_key(|g| g.created_at);
            Simulated {
                gists,
                list_calls: Mutex::new(Vec::new()),
                fetches: AtomicUsize::new(0),
            }
        }

        fn first_page_sinces(&self) -> Vec<DateTime<Utc>> {
            self.list_calls
                .lock()
                .unwrap()
                .iter()
                .filter(|(_, page)| *page == 1)
                .map(|(since, _)| *since)
                .collect()
        }
    }

    impl ApiClient for Simulated {
        fn list_public(
            &self,
            since: DateTime<Utc>,
            page: u32,
            per_page: u32,
        ) -> Result<Vec<GistSummary>, ApiError> {
            self.list_calls.lock().unwrap().push((since, page));
            let skip = (page as usize - 1) * per_page as usize;
            if skip >= PAGINATION_CEILING {
                return Ok(Vec::new());
            }
            Ok(self
                .gists
                .iter()
                .filter(|g| g.created_at >= since)
                .skip(skip)
                .take(per_page as usize)
                .cloned()
                .collect())
        }

        fn fetch(&self, id: &str) -> Result<GistSummary, ApiError> {
            self.fetches.fetch_add(1, Ordering::SeqCst);
            self.gists
                .iter()
                .find(|g| g.id == id)
                .cloned()
                .ok_or_else(|| ApiError::NotFound(id.into()))
        }
    }

    struct Failing;
    impl ApiClient for Failing {
        fn list_public(
            &self,
            _: DateTime<Utc>,
            _: u32,
            _: u32,
        ) -> Result<Vec<GistSummary>, ApiError> {
            Err(ApiError::Transport("connection refused".into()))
        }
        fn fetch(&self, id: &str) -> Result<GistSummary, ApiError> {
            Err(ApiError::NotFound(id.into()))
        }
    }

    #[test]
    fn filters_drop_multi_file_unstarred_and_wrong_language() {
        let q = query(0, 100);
        let candidates = vec![
            gist("a", 1, &[("a.py", "Python")], 1),
            gist("b", 2, &[("b.py", "Python"), ("c.py", "Python")], 5),
            gist("c", 3, &[("c.py", "Python")], 0),
            gist("d", 4, &[("d.rb", "Ruby")], 3),
            gist("e", 5, &[("e.txt", "Python")], 3),
            gist("f", 6, &[("f.PY", "python")], 2),
        ];
        let ids: Vec<_> = apply_filters(&candidates, &q)
            .into_iter()
            .map(|r| r.id)
            .collect();
        assert_eq!(ids, ["a", "f"]);
        assert!(apply_filters(&[], &q).is_empty());
    }

    #[test]
    fn small_window_is_a_single_pass() {
        let population = vec![
            gist("a", 1, &[("a.py", "Python")], 1),
            gist("b", 2, &[("b.py", "Python"), ("x.py", "Python")], 1),
            gist("c", 3, &[("c.py", "Python")], 0),
            gist("d", 4, &[("d.py", "Python")], 4),
            gist("e", 5, &[("e.rb", "Ruby")], 4),
        ];
        let api = Simulated::new(population);
        let got = enumerate_window_with(&query(0, 10), &api, RetryPolicy::immediate()).unwrap();
        assert_eq!(
            got.iter().map(|r| r.id.as_str()).collect::<Vec<_>>(),
            ["a", "d"]
        );
        assert_eq!(got[0].source, "# a\n");
    }

    #[test]
    fn empty_window_is_not_an_error() {
        let api = Simulated::new(Vec::new());
        assert!(
            enumerate_window_with(&query(0, 10), &api, RetryPolicy::immediate())
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn ceiling_triggers_bisection() {
        // The whole window holds exactly the ceiling: 2990 gists in the first
        // half and 10 in the second.
        let mut population: Vec<_> = (0..PAGINATION_CEILING as i64 - 10)
            .map(|i| gist(&format!("g{i}"), i % 1000, &[("s.py", "Python")], 1))
            .collect();
        population
            .extend((0..10).map(|i| gist(&format!("late{i}"), 3000 + i, &[("s.py", "Python")], 1)));
        let api = Simulated::new(population);
        let q = query(0, 4000);
        let got = enumerate_window_with(&q, &api, RetryPolicy::immediate()).unwrap();
        assert_eq!(api.first_page_sinces(), vec![t(0), t(0), t(2000)]);
        assert_eq!(got.len(), PAGINATION_CEILING);
        let unique: HashSet<_> = got.iter().map(|r| &r.id).collect();
        assert_eq!(unique.len(), got.len());
    }

    #[test]
    fn one_second_windows_stop_bisecting() {
        let population: Vec<_> = (0..PAGINATION_CEILING + 5)
            .map(|i| gist(&format!("g{i}"), 0, &[("s.py", "Python")], 1))
            .collect();
        let api = Simulated::new(population);
        let got = enumerate_window_with(&query(0, 1), &api, RetryPolicy::immediate()).unwrap();
        assert_eq!(got.len(), PAGINATION_CEILING);
        assert_eq!(api.first_page_sinces(), vec![t(0)]);
    }

    #[test]
    fn missing_content_is_fetched() {
        let mut listed = gist("a", 1, &[("a.py", "Python")], 1);
        listed.files.values_mut().next().unwrap().content = None;
        let full = gist("a", 1, &[("a.py", "Python")], 0);
        struct Api(GistSummary, GistSummary);
        impl ApiClient for Api {
            fn list_public(
                &self,
                _: DateTime<Utc>,
                page: u32,
                _: u32,
            ) -> Result<Vec<GistSummary>, ApiError> {
                Ok(if page == 1 {
                    vec![self.0.clone()]
                } else {
                    vec![]
                })
            }
            fn fetch(&self, _: &str) -> Result<GistSummary, ApiError> {
                Ok(self.1.clone())
            }
        }
        let got =
            enumerate_window_with(&query(0, 10), &Api(listed, full), RetryPolicy::immediate())
                .unwrap();
        assert_eq!(got[0].source, "# a\n");
        assert_eq!(got[0].stars, 1);
    }

    #[test]
    fn max_records_caps_output() {
        let population: Vec<_> = (0..50)
            .map(|i| gist(&format!("g{i}"), i, &[("s.py", "Python")], 1))
            .collect();
        let api = Simulated::new(population);
        let mut q = query(0, 100);
        q.max_records = 7;
        assert_eq!(
            enumerate_window_with(&q, &api, RetryPolicy::immediate())
                .unwrap()
                .len(),
            7
        );
    }

    #[test]
    fn transient_errors_are_retried_then_reported() {
        struct Flaky(AtomicUsize);
        impl ApiClient for Flaky {
            fn list_public(
                &self,
                _: DateTime<Utc>,
                page: u32,
                _: u32,
            ) -> Result<Vec<GistSummary>, ApiError> {
                if self.0.fetch_add(1, Ordering::SeqCst) < 2 {
                    return Err(ApiError::RateLimited { retry_after: None });
                }
                Ok(if page == 1 {
                    vec![gist("a", 1, &[("a.py", "Python")], 1)]
                } else {
                    vec![]
                })
            }
            fn fetch(&self, id: &str) -> Result<GistSummary, ApiError> {
                Err(ApiError::NotFound(id.into()))
            }
        }
        let got = enumerate_window_with(
            &query(0, 10),
            &Flaky(AtomicUsize::new(0)),
            RetryPolicy::immediate(),
        )
        .unwrap();
        assert_eq!(got.len(), 1);

        let err =
            enumerate_window_with(&query(0, 10), &Failing, RetryPolicy::immediate()).unwrap_err();
        assert!(err.partial.is_empty());
        assert!(matches!(err.error, ApiError::Transport(_)));
    }

    #[test]
    fn mine_persists_and_is_idempotent() {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::open(dir.path()).unwrap();
        let population = vec![
            gist("a", 1, &[("a.py", "Python")], 1),
            gist("b", 2, &[("b.py", "Python")], 0),
            gist("c", 3, &[("c.py", "Python")], 2),
        ];
        let api = Simulated::new(population);
        let q = query(0, 10);
        for _ in 0..2 {
            assert_eq!(
                mine_with(
                    MineStrategy::DateWindow,
                    &q,
                    &api,
                    &store,
                    RetryPolicy::immediate()
                )
                .unwrap(),
                2
            );
            assert_eq!(store.list_ids().unwrap(), ["a", "c"]);
        }
        let failure = mine_with(
            MineStrategy::DateWindow,
            &q,
            &Failing,
            &store,
            RetryPolicy::immediate(),
        )
        .unwrap_err();
        assert_eq!(failure.stored, 0);
        let scrape = mine_with(
            MineStrategy::Scrape,
            &q,
            &api,
            &store,
            RetryPolicy::immediate(),
        )
        .unwrap_err();
        assert!(matches!(scrape.kind, MineFailureKind::Unsupported));
    }

    #[test]
    fn query_validation() {
        let mut q = query(10, 10);
        assert!(matches!(q.validate(), Err(QueryError::EmptyWindow { .. })));
        q = query(0, 10);
        q.page_size = 101;
        assert_eq!(q.validate(), Err(QueryError::PageSize(101)));
        q.page_size = 100;
        assert_eq!(q.validate(), Ok(()));
    }

    #[test]
    fn replay_steps_through_repeats() {
        let since = t(0);
        let page = |ids: &[&str]| {
            serde_json::to_value(
                ids.iter()
                    .map(|id| gist(id, 1, &[("a.py", "Python")], 1))
                    .collect::<Vec<_>>(),
            )
            .unwrap()
        };
        let req = RecordedRequest::List {
            since,
            page: 1,
            per_page: 10,
        };
        let client = ReplayClient::from_exchanges(vec![
            RecordedExchange {
                request: req.clone(),
                status: 429,
                body: serde_json::Value::Null,
            },
            RecordedExchange {
                request: req,
                status: 200,
                body: page(&["x"]),
            },
        ]);
        assert!(matches!(
            client.list_public(since, 1, 10),
            Err(ApiError::RateLimited { .. })
        ));
        assert_eq!(client.list_public(since, 1, 10).unwrap().len(), 1);
        assert_eq!(client.list_public(since, 1, 10).unwrap().len(), 1);
        assert!(client.list_public(since, 2, 10).unwrap().is_empty());
        assert!(matches!(client.fetch("nope"), Err(ApiError::NotFound(_))));
    }

    fn arb_gist() -> impl Strategy<Value = GistSummary> {
        (
            "[a-f0-9]{4,8}",
            0i64..500,
            prop::collection::btree_map(
                "[a-z]{1,5}\\.(py|rb|txt)",
                prop::sample::select(vec!["Python", "Ruby", "Text"]),
                0..3,
            ),
            0u64..4,
        )
            .prop_map(|(id, secs, files, stars)| {
                let files: Vec<(String, &str)> = files.into_iter().collect();
                let refs: Vec<(&str, &str)> = files.iter().map(|(n, l)| (n.as_str(), *l)).collect();
                gist(&id, secs, &refs, stars)
            })
    }

    proptest! {
        #[test]
        fn mined_records_satisfy_every_filter(population in prop::collection::vec(arb_gist(), 0..60), min_stars in 0u64..3) {
            let by_id: BTreeMap<String, GistSummary> = population.iter().map(|g| (g.id.clone(), g.clone())).collect();
            let api = Simulated::new(by_id.values().cloned().collect());
            let mut q = query(0, 500);
            q.min_stars = min_stars;
            q.page_size = 7;
            let got = enumerate_window_with(&q, &api, RetryPolicy::immediate()).unwrap();
            let mut ids = HashSet::new();
            for record in &got {
                prop_assert!(ids.insert(record.id.clone()));
                let source = &by_id[&record.id];
                prop_assert_eq!(source.files.len(), 1);
                prop_assert!(source.stars >= min_stars);
                prop_assert!(record.filename.ends_with(".py"));
                prop_assert!(record.created_at >= q.window_start && record.created_at < q.window_end);
            }
            let expected = apply_filters(&by_id.values().cloned().collect::<Vec<_>>(), &q).len();
            prop_assert_eq!(got.len(), expected);
        }
    }
}
