//! Helpers shared by the CLI test targets.
#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_snipharness")
}

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures")
}

pub fn copy_dir(from: &Path, to: &Path) {
    fs::create_dir_all(to).unwrap();
    for entry in fs::read_dir(from).unwrap() {
        let entry = entry.unwrap();
        let target = to.join(entry.file_name());
        if entry.file_type().unwrap().is_dir() {
            copy_dir(&entry.path(), &target);
        } else {
            fs::copy(entry.path(), target).unwrap();
        }
    }
}

/// Fresh writable copy of `fixtures/<name>/store`.
pub fn store_copy(name: &str) -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    copy_dir(&fixtures().join(name).join("store"), dir.path());
    dir
}

pub fn scenario(name: &str) -> PathBuf {
    fixtures().join(name).join("scenario.json")
}

pub fn snipharness(store: &Path, args: &[&str]) -> Output {
    Command::new(bin())
        .arg("--store")
        .arg(store)
        .args(args)
        .env_remove("SNIPHARNESS_STORE")
        .output()
        .expect("binary runs")
}

pub fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

pub fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

pub fn analyze(store: &Path, phase: &str, scenario_name: &str, workers: usize) -> Output {
    let scenario = scenario(scenario_name);
    snipharness(
        store,
        &[
            "analyze",
            "--phase",
            phase,
            "--fake-runtime",
            scenario.to_str().unwrap(),
            "--workers",
            &workers.to_string(),
        ],
    )
}
