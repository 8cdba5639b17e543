//! Byte-exact Dockerfile goldens under `fixtures/goldens/`.

use std::fs;
use std::path::{Path, PathBuf};

use chrono::{TimeZone, Utc};
use snipharness_core::{
    infer_spec, render, EnvironmentSpec, NaiveStrategy, SnippetRecord, StdlibManifest,
};

fn goldens() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/goldens")
}

fn golden(name: &str) -> String {
    fs::read_to_string(goldens().join(name)).unwrap()
}

fn spec(name: &str) -> EnvironmentSpec {
    serde_json::from_str(&golden(name)).unwrap()
}

#[test]
fn inferred_geocode_spec_matches_published_dockerfile() {
    let record = SnippetRecord {
        id: "10017416".into(),
        filename: "geocode.py".into(),
        source: golden("geocode.py"),
        language_tag: "Python".into(),
        stars: 1,
        created_at: Utc.with_ymd_and_hms(2014, 4, 6, 0, 0, 0).unwrap(),
        origin_url: "https://gist.github.com/10017416".into(),
    };
    let manifest = StdlibManifest::bundled("python:2.7.13").unwrap();
    let spec = infer_spec(
        &record,
        &manifest,
        &NaiveStrategy::default(),
        "python:2.7.13",
    );
    assert_eq!(spec.language_packages, ["requests"]);
    let text = render(&spec).unwrap();
    assert_eq!(text, golden("geocode.Dockerfile"));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn manual_graph_spec_matches_golden() {
    let text = render(&spec("graph.spec.json")).unwrap();
    assert_eq!(text, golden("graph.Dockerfile"));
    for line in [
        "ENV MPLBACKEND Agg",
        "VOLUME /output",
        "RUN apt-get install -y graphviz",
    ] {
        assert!(text.lines().any(|l| l == line), "missing `{line}`");
    }
}

#[test]
fn empty_spec_matches_golden() {
    assert_eq!(
        render(&spec("empty.spec.json")).unwrap(),
        golden("empty.Dockerfile")
    );
}
