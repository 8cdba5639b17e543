//! Import extraction checked against goldens produced by Python's own `ast`
//! module (see `fixtures/parser/generate.py`).

use std::fs;
use std::path::Path;

use serde::Deserialize;
use snipharness_core::{extract_imports, ImportDecl};

#[derive(Debug, Deserialize, PartialEq)]
struct Expected {
    module_path: String,
    relative_level: usize,
    line: usize,
    module_alias: Option<String>,
    imported_names: Vec<(String, Option<String>)>,
    is_star: bool,
}

impl From<&ImportDecl> for Expected {
    fn from(d: &ImportDecl) -> Self {
        Expected {
            module_path: d.module_path.clone(),
            relative_level: d.relative_level,
            line: d.line,
            module_alias: d.module_alias.clone(),
            imported_names: d.imported_names.clone(),
            is_star: d.is_star,
        }
    }
}

fn fixtures() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/parser")
}

#[test]
fn extraction_matches_python_ast() {
    let dir = fixtures();
    let mut cases: Vec<_> = fs::read_dir(dir.join("cases"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    cases.sort();
    assert!(
        cases.len() >= 200,
        "differential corpus has only {} files",
        cases.len()
    );

    let mut mismatches = Vec::new();
    let mut compared = 0;
    for case in &cases {
        let stem = case.file_stem().unwrap().to_str().unwrap();
        let golden: Vec<Expected> = serde_json::from_str(
            &fs::read_to_string(dir.join("golden").join(format!("{stem}.json"))).unwrap(),
        )
        .unwrap();
        let source = fs::read_to_string(case).unwrap();
        let got: Vec<Expected> = extract_imports(&source)
            .iter()
            .map(Expected::from)
            .collect();
        compared += golden.len();
        if got != golden {
            mismatches.push(format!("{stem}: expected {golden:?}\n     got {got:?}"));
        }
    }
    assert!(compared > 1000);
    assert!(
        mismatches.is_empty(),
        "{} mismatching files:\n{}",
        mismatches.len(),
        mismatches.join("\n")
    );
}
