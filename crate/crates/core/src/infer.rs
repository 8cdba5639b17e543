//! Environment inference: import declarations to an [`EnvironmentSpec`].
//!
//! The pipeline extracts imports, drops relative and `__future__` imports,
//! drops anything whose top-level module is in the stdlib manifest, maps each
//! remaining declaration to an install name through a [`ResolutionStrategy`],
//! and deduplicates keeping first occurrence.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::imports::{extract_imports_with_diagnostics, ImportDecl};
use crate::runtime::{ContainerRuntime, RunOptions, RuntimeError};
use crate::stdlib::{filter_third_party, StdlibManifest};
use crate::store::SnippetRecord;

/// Everything needed to build a runnable image for one snippet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnvironmentSpec {
    pub base_image: String,
    /// Insertion-ordered `NAME value` pairs.
    pub env_vars: Vec<(String, String)>,
    pub volumes: Vec<String>,
    pub system_packages: Vec<String>,
    pub language_packages: Vec<String>,
    pub entry_file: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid environment spec: {0}")]
pub struct SpecError(pub String);

impl EnvironmentSpec {
    /// Spec with only the base image and entry file set.
    pub fn bare(base_image: impl Into<String>, entry_file: impl Into<String>) -> Self {
        EnvironmentSpec {
            base_image: base_image.into(),
            env_vars: Vec::new(),
            volumes: Vec::new(),
            system_packages: Vec::new(),
            language_packages: Vec::new(),
            entry_file: entry_file.into(),
            diagnostics: Vec::new(),
        }
    }

    pub fn validate(&self) -> Result<(), SpecError> {
        let single_line = |what: &str, v: &str| -> Result<(), SpecError> {
            if v.is_empty() || v.contains(['\n', '\r']) {
                Err(SpecError(format!(
                    "{what} `{}` must be a non-empty single line",
                    v.escape_debug()
                )))
            } else {
                Ok(())
            }
        };
        single_line("base image", &self.base_image)?;
        single_line("entry file", &self.entry_file)?;
        if self.entry_file.contains(char::is_whitespace) || self.entry_file.contains('"') {
            return Err(SpecError(format!(
                "entry file `{}` must not contain whitespace or quotes",
                self.entry_file
            )));
        }
        no_duplicates("env var", self.env_vars.iter().map(|(k, _)| k.as_str()))?;
        for (k, v) in &self.env_vars {
            single_line("env var name", k)?;
            if k.contains(char::is_whitespace) {
                return Err(SpecError(format!("env var name `{k}` contains whitespace")));
            }
            if v.contains(['\n', '\r']) {
                return Err(SpecError(format!("env var `{k}` value spans lines")));
            }
        }
        for (what, list) in [
            ("volume", &self.volumes),
            ("system package", &self.system_packages),
            ("language package", &self.language_packages),
        ] {
            no_duplicates(what, list.iter().map(String::as_str))?;
            for item in list {
                single_line(what, item)?;
                if item.contains(char::is_whitespace) || item.contains('"') {
                    return Err(SpecError(format!(
                        "{what} `{item}` must not contain whitespace or quotes"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Same spec with only the packages that installed.
    pub fn with_installed(&self, report: &InstallReport) -> Self {
        let mut spec = self.clone();
        spec.language_packages
            .retain(|p| report.installed().any(|i| i == p));
        spec
    }
}

fn no_duplicates<'a>(what: &str, items: impl Iterator<Item = &'a str>) -> Result<(), SpecError> {
    let mut seen = std::collections::HashSet::new();
    for item in items {
        if !seen.insert(item) {
            return Err(SpecError(format!("duplicate {what} `{item}`")));
        }
    }
    Ok(())
}

/// Maps one import declaration to candidate install names.
pub trait ResolutionStrategy: Send + Sync {
    fn name(&self) -> &str;
    fn resolve(&self, decl: &ImportDecl) -> Vec<String>;
}

/// The import name is the install name.
pub fn resolve_naive(decl: &ImportDecl, top_level: bool) -> Vec<String> {
    if decl.is_relative() || decl.module_path.is_empty() {
        return Vec::new();
    }
    if top_level {
        decl.top_level().map(str::to_string).into_iter().collect()
    } else {
        vec![decl.module_path.clone()]
    }
}

/// Table hit on the full dotted path, then on the top-level name, else naive.
pub fn resolve_lookup(decl: &ImportDecl, table: &LookupTable, top_level: bool) -> Vec<String> {
    if decl.is_relative() || decl.module_path.is_empty() {
        return Vec::new();
    }
    if let Some(package) = table.get(&decl.module_path) {
        return vec![package.to_string()];
    }
    if let Some(package) = decl.top_level().and_then(|top| table.get(top)) {
        return vec![package.to_string()];
    }
    resolve_naive(decl, top_level)
}

#[derive(Debug, Clone, Default)]
pub struct NaiveStrategy {
    /// Install the first dotted component instead of the full path.
    pub top_level: bool,
}

impl ResolutionStrategy for NaiveStrategy {
    fn name(&self) -> &str {
        "naive"
    }

    fn resolve(&self, decl: &ImportDecl) -> Vec<String> {
        resolve_naive(decl, self.top_level)
    }
}

#[derive(Debug, Clone)]
pub struct LookupStrategy {
    pub table: LookupTable,
    pub top_level: bool,
}

impl ResolutionStrategy for LookupStrategy {
    fn name(&self) -> &str {
        "lookup"
    }

    fn resolve(&self, decl: &ImportDecl) -> Vec<String> {
        resolve_lookup(decl, &self.table, self.top_level)
    }
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("cannot read lookup table {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Format {
        path: PathBuf,
        line: usize,
        message: String,
    },
}

/// Module name to install name, read from a `module<TAB>package` TSV file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LookupTable {
    pub entries: BTreeMap<String, String>,
    pub source_path: Option<PathBuf>,
}

const STARTER_TABLE: &str = include_str!("../tables/starter.tsv");

impl LookupTable {
    /// Table shipped with the crate.
    pub fn starter() -> Self {
        let mut table = LookupTable::parse(STARTER_TABLE, Path::new("starter.tsv"))
            .expect("starter table is valid");
        table.source_path = None;
        table
    }

    pub fn load(path: &Path) -> Result<Self, TableError> {
        let text = fs::read_to_string(path).map_err(|source| TableError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        LookupTable::parse(&text, path)
    }

    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str, path: &Path) -> Result<Self, TableError> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| TableError::Format {
                path: path.to_path_buf(),
                line: i + 1,
                message,
            };
            let mut cols = line.split('\t');
            let (Some(module), Some(package), None) = (cols.next(), cols.next(), cols.next())
            else {
                return Err(err("expected exactly two tab-separated columns".into()));
            };
            let (module, package) = (module.trim(), package.trim());
            if module.is_empty() || package.is_empty() {
                return Err(err("empty module or package name".into()));
            }
            if entries
                .insert(module.to_string(), package.to_string())
                .is_some()
            {
                return Err(err(format!("duplicate module `{module}`")));
            }
        }
        Ok(LookupTable {
            entries,
            source_path: Some(path.to_path_buf()),
        })
    }

    pub fn get(&self, module: &str) -> Option<&str> {
        self.entries.get(module).map(String::as_str)
    }
}

/// Infers the language packages a snippet needs. Only `base_image`,
/// `entry_file` and `language_packages` are filled.
pub fn infer_spec(
    record: &SnippetRecord,
    manifest: &StdlibManifest,
    strategy: &dyn ResolutionStrategy,
    base_image: &str,
) -> EnvironmentSpec {
    let extraction = extract_imports_with_diagnostics(&record.source);
    let mut spec = EnvironmentSpec::bare(base_image, record.stored_filename());
    spec.diagnostics = extraction
        .diagnostics
        .iter()
        .map(|d| format!("line {}: {}", d.line, d.message))
        .collect();

    for decl in extraction
        .imports
        .iter()
        .filter(|d| !d.is_relative() && !d.is_future())
    {
        let Some(top) = decl.top_level() else {
            continue;
        };
        if filter_third_party(&[top.to_string()], manifest).is_empty() {
            continue;
        }
        for package in strategy.resolve(decl) {
            if !spec.language_packages.contains(&package) {
                spec.language_packages.push(package);
            }
        }
    }
    spec
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InstallStatus {
    Installed,
    Failed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstallEntry {
    pub package: String,
    pub status: InstallStatus,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstallReport {
    pub entries: Vec<InstallEntry>,
}

impl InstallReport {
    pub fn installed(&self) -> impl Iterator<Item = &str> {
        self.entries
            .iter()
            .filter(|e| e.status == InstallStatus::Installed)
            .map(|e| e.package.as_str())
    }

    pub fn failed(&self) -> impl Iterator<Item = &str> {
        self.entries
            .iter()
            .filter(|e| e.status == InstallStatus::Failed)
            .map(|e| e.package.as_str())
    }
}

/// Attempts every language package once, in order. Packages that fail to
/// install are recorded and skipped; only a runtime failure aborts.
pub fn apply_spec(
    spec: &EnvironmentSpec,
    runtime: &dyn ContainerRuntime,
    options: &RunOptions,
) -> Result<InstallReport, RuntimeError> {
    let mut report = InstallReport::default();
    for package in &spec.language_packages {
        let entry = match runtime.install(&spec.base_image, package, options)? {
            Ok(()) => InstallEntry {
                package: package.clone(),
                status: InstallStatus::Installed,
                message: String::new(),
            },
            Err(message) => {
                log::info!("ignoring uninstallable package `{package}`: {message}");
                InstallEntry {
                    package: package.clone(),
                    status: InstallStatus::Failed,
                    message,
                }
            }
        };
        report.entries.push(entry);
    }
    Ok(report)
}
