//! Standard-library manifests.
//!
//! A module counts as standard library when it imports in a clean container
//! of the interpreter image. Manifests are either probed against a runtime or
//! loaded from the static files bundled for the two pinned images.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::outcome::{PYTHON2_IMAGE, PYTHON3_IMAGE};
use crate::runtime::{image_tag, BuildRequest, ContainerRuntime, RunOptions, RuntimeError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ManifestMethod {
    #[serde(rename = "probe")]
    Probe,
    #[serde(rename = "static-file")]
    StaticFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StdlibManifest {
    pub base_image: String,
    pub method: ManifestMethod,
    pub generated_at: DateTime<Utc>,
    pub modules: BTreeSet<String>,
}

#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("cannot read manifest {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed manifest {path}: {source}")]
    Malformed {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

#[derive(Debug, Error)]
pub enum ProbeError {
    #[error("probe needs at least one candidate module name")]
    NoCandidates,
    #[error("probe container failed: {0}")]
    Runtime(#[from] RuntimeError),
    #[error("probe io error: {0}")]
    Io(#[from] std::io::Error),
}

const BUNDLED_PY2: &str = include_str!("../manifests/python-2.7.13.json");
const BUNDLED_PY3: &str = include_str!("../manifests/python-3.6.5.json");

/// Runs inside the clean image; one `OK <name>` / `FAIL <name>` line per
/// candidate. Each import happens in a child interpreter so a crashing
/// module cannot take the probe down. Valid for Python 2.7 and 3.x.
pub const PROBE_SCRIPT: &str = r#"import os
import subprocess
import sys

devnull = open(os.devnull, 'w')
for line in open('candidates.txt'):
    name = line.strip()
    if not name:
        continue
    try:
        code = subprocess.call([sys.executable, '-c', 'import ' + name],
                               stdin=devnull, stdout=devnull, stderr=devnull)
    except Exception:
        code = 1
    sys.stdout.write('%s %s\n' % ('OK' if code == 0 else 'FAIL', name))
    sys.stdout.flush()
"#;

impl StdlibManifest {
    pub fn contains(&self, name: &str) -> bool {
        self.modules.contains(name)
    }

    /// Static manifest shipped for one of the pinned images.
    pub fn bundled(base_image: &str) -> Option<StdlibManifest> {
        let text = match base_image {
            PYTHON2_IMAGE => BUNDLED_PY2,
            PYTHON3_IMAGE => BUNDLED_PY3,
            _ => return None,
        };
        Some(serde_json::from_str(text).expect("bundled manifest is valid"))
    }

    pub fn load(path: &Path) -> Result<StdlibManifest, ManifestError> {
        let text = fs::read_to_string(path).map_err(|source| ManifestError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|source| ManifestError::Malformed {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn save(&self, path: &Path) -> Result<(), ManifestError> {
        let mut text = serde_json::to_string_pretty(self).expect("manifest serializes");
        text.push('\n');
        fs::write(path, text).map_err(|source| ManifestError::Io {
            path: path.to_path_buf(),
            source,
        })
    }
}

/// Probes `base_image` for which of `candidates` import in a clean container.
pub fn probe_manifest(
    base_image: &str,
    candidates: &BTreeSet<String>,
    runtime: &dyn ContainerRuntime,
) -> Result<StdlibManifest, ProbeError> {
    if candidates.is_empty() {
        return Err(ProbeError::NoCandidates);
    }
    // Anything that is not an identifier cannot be imported by name anyway.
    let probed: Vec<&String> = candidates
        .iter()
        .filter(|n| {
            let mut chars = n.chars();
            chars
                .next()
                .is_some_and(|c| c == '_' || c.is_ascii_alphabetic())
                && chars.all(|c| c == '_' || c.is_ascii_alphanumeric())
        })
        .collect();

    let dir = tempfile::tempdir()?;
    fs::write(
        dir.path().join("Dockerfile"),
        format!(
            "FROM {base_image}\nADD probe.py probe.py\nADD candidates.txt candidates.txt\nCMD [\"python\", \"probe.py\"]\n"
        ),
    )?;
    fs::write(dir.path().join("probe.py"), PROBE_SCRIPT)?;
    let list: String = probed.iter().map(|n| format!("{n}\n")).collect();
    fs::write(dir.path().join("candidates.txt"), list)?;

    let tag = image_tag("stdlib-probe", base_image);
    let image = runtime.build(&BuildRequest {
        context_dir: dir.path(),
        snippet_id: "stdlib-probe",
        tag: &tag,
    })?;
    let options = RunOptions {
        timeout: Duration::from_secs(600),
        network: false,
    };
    let output = runtime.run(&image, &options);
    runtime.remove_image(&image);
    let output = output?;
    if output.timed_out {
        return Err(RuntimeError::Run("stdlib probe timed out".into()).into());
    }

    let stdout = String::from_utf8_lossy(&output.stdout);
    let modules = parse_probe_output(&stdout)
        .into_iter()
        .filter(|name| candidates.contains(name))
        .collect();
    Ok(StdlibManifest {
        base_image: base_image.to_string(),
        method: ManifestMethod::Probe,
        generated_at: Utc::now(),
        modules,
    })
}

/// Names reported `OK` by the probe protocol; anything else is ignored.
pub fn parse_probe_output(stdout: &str) -> BTreeSet<String> {
    stdout
        .lines()
        .filter_map(|line| line.trim_end().strip_prefix("OK "))
        .map(|name| name.trim().to_string())
        .filter(|name| !name.is_empty())
        .collect()
}

/// `names` minus the manifest's modules, order preserved.
pub fn filter_third_party(names: &[String], manifest: &StdlibManifest) -> Vec<String> {
    names
        .iter()
        .filter(|n| !manifest.contains(n))
        .cloned()
        .collect()
}
