//! On-disk corpus store.
//!
//! Layout under the store root:
//!
//! ```text
//! <root>/<id>/snippet.<ext>   source text
//! <root>/<id>/meta.json       record metadata (flat, snake_case)
//! <root>/<id>/Dockerfile      optional, written by the Dockerfile generator
//! <root>/results.jsonl        append-only execution log
//! ```
//!
//! Files are replaced with write-to-temp-then-rename inside the record
//! directory. Appends to the results log go through one mutex-guarded handle,
//! so a `Store` shared between worker threads interleaves whole lines only.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{self, Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::outcome::ExecutionOutcome;

pub const META_FILE: &str = "meta.json";
pub const DOCKERFILE: &str = "Dockerfile";
pub const RESULTS_FILE: &str = "results.jsonl";

#[derive(Debug, Error)]
pub enum StoreError {
    #[error("io error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("corrupt file {path}: {source}")]
    Corrupt {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("snippet `{0}` not found")]
    NotFound(String),
    #[error("validation failed: {0}")]
    Validation(String),
}

impl StoreError {
    fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        StoreError::Io {
            path: path.into(),
            source,
        }
    }
}

/// One mined snippet. The source text lives next to the metadata as
/// `snippet.<ext>`; `meta.json` holds every other field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnippetRecord {
    pub id: String,
    pub filename: String,
    #[serde(skip)]
    pub source: String,
    pub language_tag: String,
    pub stars: u64,
    pub created_at: DateTime<Utc>,
    pub origin_url: String,
}

impl SnippetRecord {
    /// Name of the stored source file: `snippet` plus the original extension.
    pub fn stored_filename(&self) -> String {
        match Path::new(&self.filename)
            .extension()
            .and_then(|e| e.to_str())
        {
            Some(ext) if !ext.is_empty() => format!("snippet.{ext}"),
            _ => "snippet".to_string(),
        }
    }

    pub fn validate(&self) -> Result<(), StoreError> {
        validate_id(&self.id)?;
        let name = self.filename.as_str();
        if name.is_empty() || name == "." || name == ".." || name.contains(['/', '\\', '\0']) {
            return Err(StoreError::Validation(format!(
                "filename `{name}` must be a single relative file name"
            )));
        }
        Ok(())
    }
}

pub fn is_valid_id(id: &str) -> bool {
    !id.is_empty()
        && id
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-')
}

pub fn validate_id(id: &str) -> Result<(), StoreError> {
    if is_valid_id(id) {
        Ok(())
    } else if id.is_empty() {
        Err(StoreError::Validation("snippet id is empty".into()))
    } else {
        Err(StoreError::Validation(format!(
            "snippet id `{id}` must match [A-Za-z0-9_-]+"
        )))
    }
}

/// Replaces every character outside `[A-Za-z0-9_-]` with `_`.
pub fn sanitize_id(raw: &str) -> String {
    raw.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '_' || c == '-' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

#[derive(Debug)]
pub struct Store {
    root: PathBuf,
    log: Mutex<Option<File>>,
    id_locks: Mutex<HashMap<String, Arc<Mutex<()>>>>,
}

impl Store {
    /// Opens (creating if needed) a store rooted at `root`.
    pub fn open(root: impl Into<PathBuf>) -> Result<Self, StoreError> {
        let root = root.into();
        fs::create_dir_all(&root).map_err(|e| StoreError::io(&root, e))?;
        Ok(Store {
            root,
            log: Mutex::new(None),
            id_locks: Mutex::new(HashMap::new()),
        })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn record_dir(&self, id: &str) -> PathBuf {
        self.root.join(id)
    }

    pub fn results_path(&self) -> PathBuf {
        self.root.join(RESULTS_FILE)
    }

    pub fn contains(&self, id: &str) -> bool {
        is_valid_id(id) && self.record_dir(id).join(META_FILE).is_file()
    }

    fn lock_for(&self, id: &str) -> Arc<Mutex<()>> {
        let mut locks = self.id_locks.lock().unwrap_or_else(|e| e.into_inner());
        locks.entry(id.to_string()).or_default().clone()
    }

    /// Persists `record`, replacing any prior record with the same id.
    /// Returns the path of the stored source file.
    pub fn put_snippet(&self, record: &SnippetRecord) -> Result<PathBuf, StoreError> {
        record.validate()?;
        let lock = self.lock_for(&record.id);
        let _guard = lock.lock().unwrap_or_else(|e| e.into_inner());

        let dir = self.record_dir(&record.id);
        fs::create_dir_all(&dir).map_err(|e| StoreError::io(&dir, e))?;

        let stored = record.stored_filename();
        let source_path = dir.join(&stored);
        write_atomic(&source_path, record.source.as_bytes())?;

        let meta = serde_json::to_vec_pretty(record).expect("record serializes");
        write_atomic(&dir.join(META_FILE), &meta)?;

        // A previous record under this id may have used another extension.
        let entries = fs::read_dir(&dir).map_err(|e| StoreError::io(&dir, e))?;
        for entry in entries.flatten() {
            let name = entry.file_name();
            let name = name.to_string_lossy();
            if (name == "snippet" || name.starts_with("snippet.")) && name != stored {
                let _ = fs::remove_file(entry.path());
            }
        }
        Ok(source_path)
    }

    pub fn get_snippet(&self, id: &str) -> Result<SnippetRecord, StoreError> {
        if !is_valid_id(id) {
            return Err(StoreError::NotFound(id.to_string()));
        }
        let dir = self.record_dir(id);
        let meta_path = dir.join(META_FILE);
        let meta = match fs::read(&meta_path) {
            Ok(bytes) => bytes,
            Err(e) if e.kind() == io::ErrorKind::NotFound => {
                return Err(StoreError::NotFound(id.to_string()))
            }
            Err(e) => return Err(StoreError::io(meta_path, e)),
        };
        let mut record: SnippetRecord =
            serde_json::from_slice(&meta).map_err(|source| StoreError::Corrupt {
                path: meta_path.clone(),
                source,
            })?;
        if record.id != id {
            return Err(StoreError::Validation(format!(
                "{} declares id `{}` but lives under `{id}`",
                meta_path.display(),
                record.id
            )));
        }
        let source_path = dir.join(record.stored_filename());
        let bytes = fs::read(&source_path).map_err(|e| StoreError::io(&source_path, e))?;
        record.source = String::from_utf8_lossy(&bytes).into_owned();
        Ok(record)
    }

    /// Ids of every stored record, sorted.
    pub fn list_ids(&self) -> Result<Vec<String>, StoreError> {
        let entries = fs::read_dir(&self.root).map_err(|e| StoreError::io(&self.root, e))?;
        let mut ids = Vec::new();
        for entry in entries {
            let entry = entry.map_err(|e| StoreError::io(&self.root, e))?;
            let name = entry.file_name().to_string_lossy().into_owned();
            if is_valid_id(&name) && entry.path().join(META_FILE).is_file() {
                ids.push(name);
            }
        }
        ids.sort();
        Ok(ids)
    }

    pub fn snippet_path(&self, id: &str) -> Result<PathBuf, StoreError> {
        let record = self.get_snippet(id)?;
        Ok(self.record_dir(id).join(record.stored_filename()))
    }

    /// Atomically writes an auxiliary file (e.g. the Dockerfile) into an
    /// existing record directory.
    pub fn put_artifact(&self, id: &str, name: &str, bytes: &[u8]) -> Result<PathBuf, StoreError> {
        validate_id(id)?;
        if !self.contains(id) {
            return Err(StoreError::Validation(format!("unknown snippet id `{id}`")));
        }
        let lock = self.lock_for(id);
        let _guard = lock.lock().unwrap_or_else(|e| e.into_inner());
        let path = self.record_dir(id).join(name);
        write_atomic(&path, bytes)?;
        Ok(path)
    }

    pub fn read_artifact(&self, id: &str, name: &str) -> Result<Option<String>, StoreError> {
        validate_id(id)?;
        let path = self.record_dir(id).join(name);
        match fs::read_to_string(&path) {
            Ok(text) => Ok(Some(text)),
            Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(StoreError::io(path, e)),
        }
    }

    /// Appends one outcome line to `results.jsonl`.
    pub fn append_result(&self, outcome: &ExecutionOutcome) -> Result<(), StoreError> {
        if !self.contains(&outcome.snippet_id) {
            return Err(StoreError::Validation(format!(
                "outcome references unknown snippet id `{}`",
                outcome.snippet_id
            )));
        }
        let mut line = serde_json::to_string(outcome).expect("outcome serializes");
        line.push('\n');

        let path = self.results_path();
        let mut guard = self.log.lock().unwrap_or_else(|e| e.into_inner());
        if guard.is_none() {
            *guard = Some(open_log(&path)?);
        }
        let file = guard.as_mut().expect("log handle opened above");
        file.write_all(line.as_bytes())
            .and_then(|_| file.flush())
            .map_err(|e| StoreError::io(&path, e))
    }

    /// Parses every line of `results.jsonl`. A final line that fails to parse
    /// is treated as a torn write and skipped with a warning.
    pub fn read_results(&self) -> Result<Vec<ExecutionOutcome>, StoreError> {
        let path = self.results_path();
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(StoreError::io(path, e)),
        };
        parse_results(&text, &path)
    }
}

pub(crate) fn parse_results(text: &str, path: &Path) -> Result<Vec<ExecutionOutcome>, StoreError> {
    let lines: Vec<&str> = text.lines().collect();
    let mut out = Vec::with_capacity(lines.len());
    for (i, line) in lines.iter().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str(line) {
            Ok(outcome) => out.push(outcome),
            Err(err) if i + 1 == lines.len() => {
                log::warn!("{}: skipping truncated final line: {err}", path.display());
            }
            Err(source) => {
                return Err(StoreError::Corrupt {
                    path: path.to_path_buf(),
                    source,
                })
            }
        }
    }
    Ok(out)
}

fn open_log(path: &Path) -> Result<File, StoreError> {
    let mut file = OpenOptions::new()
        .create(true)
        .read(true)
        .append(true)
        .open(path)
        .map_err(|e| StoreError::io(path, e))?;
    // Terminate a torn final line so the next record starts on its own line.
    let len = file.metadata().map_err(|e| StoreError::io(path, e))?.len();
    if len > 0 {
        let mut last = [0u8; 1];
        file.seek(SeekFrom::Start(len - 1))
            .and_then(|_| file.read_exact(&mut last))
            .map_err(|e| StoreError::io(path, e))?;
        if last[0] != b'\n' {
            file.write_all(b"\n").map_err(|e| StoreError::io(path, e))?;
        }
    }
    Ok(file)
}

pub(crate) fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), StoreError> {
    let dir = path.parent().unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| StoreError::io(dir, e))?;
    tmp.write_all(bytes)
        .map_err(|e| StoreError::io(tmp.path(), e))?;
    tmp.persist(path)
        .map_err(|e| StoreError::io(path, e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outcome::{OutcomeClass, Phase};
    use chrono::TimeZone;
    use proptest::prelude::*;

    pub(crate) fn record(id: &str, source: &str) -> SnippetRecord {
        SnippetRecord {
            id: id.to_string(),
            filename: "snippet.py".to_string(),
            source: source.to_string(),
            language_tag: "Python".to_string(),
            stars: 3,
            created_at: Utc.with_ymd_and_hms(2014, 4, 7, 12, 0, 0).unwrap(),
            origin_url: format!("https://gist.github.com/{id}"),
        }
    }

    fn outcome(id: &str, n: u64) -> ExecutionOutcome {
        ExecutionOutcome {
            snippet_id: id.to_string(),
            phase: Phase::BaselineV2,
            outcome_class: OutcomeClass::exception("ImportError"),
            exception_name: Some("ImportError".into()),
            exception_message: format!("No module named m{n}"),
            exit_code: 1,
            duration_ms: n,
            stdout_tail: String::new(),
            stderr_tail: String::new(),
            install_report: None,
        }
    }

    #[test]
    fn put_creates_layout() {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::open(dir.path()).unwrap();
        let path = store
            .put_snippet(&record("10017416", "import requests\n"))
            .unwrap();
        assert_eq!(path, dir.path().join("10017416").join("snippet.py"));
        assert!(path.is_file());
        assert!(dir.path().join("10017416/meta.json").is_file());
    }

    #[test]
    fn empty_id_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::open(dir.path()).unwrap();
        let err = store.put_snippet(&record("", "x")).unwrap_err();
        assert!(matches!(err, StoreError::Validation(_)));
        let err = store.put_snippet(&record("../evil", "x")).unwrap_err();
        assert!(matches!(err, StoreError::Validation(_)));
    }

    #[test]
    fn second_put_wins() {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::open(dir.path()).unwrap();
        store.put_snippet(&record("a1", "first")).unwrap();
        store.put_snippet(&record("a1", "second")).unwrap();
        assert_eq!(store.get_snippet("a1").unwrap().source, "second");
        assert_eq!(store.list_ids().unwrap(), vec!["a1".to_string()]);
        let files: Vec<_> = fs::read_dir(dir.path().join("a1")).unwrap().collect();
        assert_eq!(files.len(), 2, "no temp files left behind");
    }

    #[test]
    fn extension_change_removes_stale_source() {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::open(dir.path()).unwrap();
        store.put_snippet(&record("a1", "py")).unwrap();
        let mut r = record("a1", "sh");
        r.filename = "run.sh".into();
        store.put_snippet(&r).unwrap();
        assert!(!dir.path().join("a1/snippet.py").exists());
        assert_eq!(store.get_snippet("a1").unwrap(), r);
    }

    #[test]
    fn missing_snippet_is_not_found() {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::open(dir.path()).unwrap();
        assert!(matches!(
            store.get_snippet("missing"),
            Err(StoreError::NotFound(_))
        ));
    }

    #[test]
    fn truncated_meta_names_the_file() {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::open(dir.path()).unwrap();
        store.put_snippet(&record("c1", "x = 1\n")).unwrap();
        let meta = dir.path().join("c1/meta.json");
        let text = fs::read_to_string(&meta).unwrap();
        fs::write(&meta, &text[..text.len() / 2]).unwrap();
        match store.get_snippet("c1") {
            Err(StoreError::Corrupt { path, .. }) => assert_eq!(path, meta),
            other => panic!("expected Corrupt, got {other:?}"),
        }
    }

    #[test]
    fn append_counts_and_unknown_id() {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::open(dir.path()).unwrap();
        store.put_snippet(&record("s1", "")).unwrap();
        for n in 0..5 {
            store.append_result(&outcome("s1", n)).unwrap();
        }
        let text = fs::read_to_string(store.results_path()).unwrap();
        assert_eq!(text.lines().count(), 5);
        assert_eq!(store.read_results().unwrap().len(), 5);
        assert!(matches!(
            store.append_result(&outcome("ghost", 0)),
            Err(StoreError::Validation(_))
        ));
    }

    #[test]
    fn append_preserves_prefix() {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::open(dir.path()).unwrap();
        store.put_snippet(&record("s1", "")).unwrap();
        store.append_result(&outcome("s1", 1)).unwrap();
        let before = fs::read(store.results_path()).unwrap();
        store.append_result(&outcome("s1", 2)).unwrap();
        let after = fs::read(store.results_path()).unwrap();
        assert!(after.starts_with(&before));
    }

    #[test]
    fn torn_final_line_is_skipped_and_repaired() {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::open(dir.path()).unwrap();
        store.put_snippet(&record("s1", "")).unwrap();
        store.append_result(&outcome("s1", 1)).unwrap();
        let mut f = OpenOptions::new()
            .append(true)
            .open(store.results_path())
            .unwrap();
        f.write_all(b"{\"id\":\"s1\",\"pha").unwrap();
        drop(f);
        assert_eq!(store.read_results().unwrap().len(), 1);

        // A fresh handle appends after the torn line without merging into it.
        let store = Store::open(dir.path()).unwrap();
        store.append_result(&outcome("s1", 2)).unwrap();
        let text = fs::read_to_string(store.results_path()).unwrap();
        assert_eq!(text.lines().count(), 3);
        assert!(matches!(
            store.read_results(),
            Err(StoreError::Corrupt { .. })
        ));
    }

    #[test]
    fn concurrent_appends_lose_nothing() {
        let dir = tempfile::tempdir().unwrap();
        let store = Store::open(dir.path()).unwrap();
        for w in 0..8 {
            store.put_snippet(&record(&format!("w{w}"), "")).unwrap();
        }
        std::thread::scope(|s| {
            for w in 0..8 {
                let store = &store;
                s.spawn(move || {
                    for n in 0..100 {
                        store.append_result(&outcome(&format!("w{w}"), n)).unwrap();
                    }
                });
            }
        });
        let text = fs::read_to_string(store.results_path()).unwrap();
        assert_eq!(text.lines().count(), 800);
        let mut got: Vec<(String, u64)> = store
            .read_results()
            .unwrap()
            .into_iter()
            .map(|o| (o.snippet_id, o.duration_ms))
            .collect();
        got.sort();
        let mut want: Vec<(String, u64)> = (0..8)
            .flat_map(|w| (0..100).map(move |n| (format!("w{w}"), n)))
            .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn sanitize_produces_valid_ids() {
        assert_eq!(sanitize_id("ab/c d"), "ab_c_d");
        assert!(is_valid_id(&sanitize_id("héllo.wörld")));
    }

    proptest! {
        #[test]
        fn put_get_round_trip(
            id in "[A-Za-z0-9_-]{1,24}",
            source in "\\PC{0,200}",
            stars in 0u64..100_000,
            secs in 0i64..2_000_000_000,
            ext in "(py|txt|sh|)",
        ) {
            let dir = tempfile::tempdir().unwrap();
            let store = Store::open(dir.path()).unwrap();
            let r = SnippetRecord {
                id: id.clone(),
                filename: if ext.is_empty() { "script".into() } else { format!("f.{ext}") },
                source,
                language_tag: "Python".into(),
                stars,
                created_at: Utc.timestamp_opt(secs, 0).unwrap(),
                origin_url: "https://example.invalid/x".into(),
            };
            store.put_snippet(&r).unwrap();
            prop_assert_eq!(store.get_snippet(&id).unwrap(), r);
        }
    }
}
