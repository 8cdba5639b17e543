//! Dockerfile rendering.
//!
//! Line order is fixed: `FROM`, `ENV`s, `VOLUME`s, apt lines (only when system
//! packages exist), `ADD` of the entry file, exec-form pip installs, `CMD`.
//! Output uses LF line endings and ends with a newline.

use std::fmt::Write as _;
use std::path::PathBuf;

use thiserror::Error;

use crate::infer::{EnvironmentSpec, SpecError};
use crate::store::{Store, StoreError, DOCKERFILE};

/// File name of the in-container runner, when builds use it.
pub const SHIM_FILE: &str = "shim.py";

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum RenderMode {
    /// `CMD ["python", "<entry>"]`.
    #[default]
    Direct,
    /// Adds the runner and starts it with the entry file as argument.
    Shim,
}

#[derive(Debug, Error)]
pub enum RenderError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Store(#[from] StoreError),
}

/// Launcher name inside the image. Both pinned images expose `python`.
pub fn interpreter_for(_base_image: &str) -> &'static str {
    "python"
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("string serializes")
}

pub fn render(spec: &EnvironmentSpec) -> Result<String, RenderError> {
    render_with(spec, RenderMode::Direct)
}

pub fn render_with(spec: &EnvironmentSpec, mode: RenderMode) -> Result<String, RenderError> {
    spec.validate()?;
    let mut out = String::new();
    let _ = writeln!(out, "FROM {}", spec.base_image);
    for (name, value) in &spec.env_vars {
        let _ = writeln!(out, "ENV {name} {value}");
    }
    for volume in &spec.volumes {
        let _ = writeln!(out, "VOLUME {volume}");
    }
    if !spec.system_packages.is_empty() {
        out.push_str("RUN apt-get update\n");
        for package in &spec.system_packages {
            let _ = writeln!(out, "RUN apt-get install -y {package}");
        }
    }
    let entry = &spec.entry_file;
    let _ = writeln!(out, "ADD {entry} {entry}");
    if mode == RenderMode::Shim {
        let _ = writeln!(out, "ADD {SHIM_FILE} {SHIM_FILE}");
    }
    for package in &spec.language_packages {
        let _ = writeln!(out, "RUN [\"pip\", \"install\", {}]", json_str(package));
    }
    let python = json_str(interpreter_for(&spec.base_image));
    match mode {
        RenderMode::Direct => {
            let _ = writeln!(out, "CMD [{python}, {}]", json_str(entry));
        }
        RenderMode::Shim => {
            let _ = writeln!(
                out,
                "CMD [{python}, {}, {}]",
                json_str(SHIM_FILE),
                json_str(entry)
            );
        }
    }
    Ok(out)
}

/// Renders `spec` and stores it as `<root>/<id>/Dockerfile`.
pub fn write_dockerfile(
    record_id: &str,
    spec: &EnvironmentSpec,
    store: &Store,
) -> Result<PathBuf, RenderError> {
    let text = render(spec)?;
    Ok(store.put_artifact(record_id, DOCKERFILE, text.as_bytes())?)
}
