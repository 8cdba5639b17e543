use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fs;
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::{BuildRequest, ContainerRuntime, ImageRef, RunOptions, RunOutput, RuntimeError};
use crate::harness::SENTINEL_PREFIX;

/// Scenario file for [`FakeRuntime`].
///
/// ```json
/// {
///   "registry": ["requests"],
///   "stdlib": {"python:2.7.13": ["json", "os"]},
///   "outcomes": {
///     "gist1": {"exit_code": 1, "stderr": "ImportError: No module named requests",
///               "requires": ["requests"], "then": {"shim_record": {"status": "success"}}}
///   }
/// }
/// ```
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct FakeScenario {
    /// Package names `pip install` accepts.
    #[serde(default)]
    pub registry: BTreeSet<String>,
    /// Modules importable in each clean image, answered to stdlib probes.
    #[serde(default)]
    pub stdlib: BTreeMap<String, BTreeSet<String>>,
    #[serde(default)]
    pub outcomes: BTreeMap<String, ScriptedRun>,
}

/// Scripted behavior for one snippet.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScriptedRun {
    #[serde(default)]
    pub exit_code: i32,
    #[serde(default)]
    pub stdout: String,
    #[serde(default)]
    pub stderr: String,
    /// Appended to stderr as the runner sentinel line when present.
    #[serde(default)]
    pub shim_record: Option<serde_json::Value>,
    #[serde(default)]
    pub timed_out: bool,
    /// Makes the image build fail with this message.
    #[serde(default)]
    pub build_error: Option<String>,
    #[serde(default)]
    pub duration_ms: u64,
    /// Per-base-image override, consulted before `requires`.
    #[serde(default)]
    pub images: BTreeMap<String, ScriptedRun>,
    /// When every listed package is installed in the image, `then` applies.
    #[serde(default)]
    pub requires: Vec<String>,
    #[serde(default)]
    pub then: Option<Box<ScriptedRun>>,
}

impl ScriptedRun {
    fn resolve(&self, base_image: &str, installed: &BTreeSet<String>) -> &ScriptedRun {
        if let Some(over) = self.images.get(base_image) {
            return over.resolve(base_image, installed);
        }
        match &self.then {
            Some(then)
                if !self.requires.is_empty()
                    && self.requires.iter().all(|p| installed.contains(p)) =>
            {
                then.resolve(base_image, installed)
            }
            _ => self,
        }
    }
}

#[derive(Debug, Clone)]
struct BuiltImage {
    base_image: String,
    installed: BTreeSet<String>,
    probe_candidates: Option<Vec<String>>,
}

/// Deterministic in-process runtime driven by a [`FakeScenario`].
#[derive(Debug)]
pub struct FakeRuntime {
    scenario: FakeScenario,
    images: Mutex<HashMap<String, BuiltImage>>,
    counter: AtomicU64,
}

impl FakeRuntime {
    pub fn new(scenario: FakeScenario) -> Self {
        FakeRuntime {
            scenario,
            images: Mutex::new(HashMap::new()),
            counter: AtomicU64::new(0),
        }
    }

    pub fn from_file(path: &Path) -> Result<Self, RuntimeError> {
        let text = fs::read_to_string(path)?;
        let scenario: FakeScenario = serde_json::from_str(&text).map_err(|e| {
            RuntimeError::Unavailable(format!(
                "invalid fake runtime scenario {}: {e}",
                path.display()
            ))
        })?;
        Ok(FakeRuntime::new(scenario))
    }

    pub fn scenario(&self) -> &FakeScenario {
        &self.scenario
    }
}

/// Base image and pip packages named in a Dockerfile.
fn parse_dockerfile(text: &str) -> (String, Vec<String>) {
    let mut base = String::new();
    let mut packages = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix("FROM ") {
            base = rest.trim().to_string();
        } else if let Some(rest) = line.strip_prefix("RUN ") {
            let rest = rest.trim();
            let words: Vec<String> = if rest.starts_with('[') {
                serde_json::from_str(rest).unwrap_or_default()
            } else {
                rest.split_whitespace().map(str::to_string).collect()
            };
            if words.len() > 2 && words[0] == "pip" && words[1] == "install" {
                packages.extend(words[2..].iter().filter(|w| !w.starts_with('-')).cloned());
            }
        }
    }
    (base, packages)
}

impl ContainerRuntime for FakeRuntime {
    fn name(&self) -> &str {
        "fake"
    }

    fn check_available(&self) -> Result<(), RuntimeError> {
        Ok(())
    }

    fn build(&self, request: &BuildRequest<'_>) -> Result<ImageRef, RuntimeError> {
        let dockerfile = fs::read_to_string(request.context_dir.join("Dockerfile"))?;
        let (base_image, packages) = parse_dockerfile(&dockerfile);
        if let Some(script) = self.scenario.outcomes.get(request.snippet_id) {
            if let Some(message) = &script.build_error {
                return Err(RuntimeError::Build(message.clone()));
            }
        }
        if let Some(missing) = packages
            .iter()
            .find(|p| !self.scenario.registry.contains(*p))
        {
            return Err(RuntimeError::Build(format!(
                "pip install {missing}: No matching distribution found for {missing}"
            )));
        }
        let probe_candidates = match fs::read_to_string(request.context_dir.join("candidates.txt"))
        {
            Ok(text) => Some(
                text.lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty())
                    .map(str::to_string)
                    .collect(),
            ),
            Err(_) => None,
        };
        let n = self.counter.fetch_add(1, Ordering::Relaxed);
        let reference = format!("fake/{}#{n}", request.tag);
        let image = BuiltImage {
            base_image,
            installed: packages.into_iter().collect(),
            probe_candidates,
        };
        self.images
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .insert(reference.clone(), image);
        Ok(ImageRef {
            reference,
            snippet_id: request.snippet_id.to_string(),
        })
    }

    fn run(&self, image: &ImageRef, _options: &RunOptions) -> Result<RunOutput, RuntimeError> {
        let built = self
            .images
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .get(&image.reference)
            .cloned()
            .ok_or_else(|| RuntimeError::Run(format!("no such image {}", image.reference)))?;

        if let Some(candidates) = &built.probe_candidates {
            let importable = self.scenario.stdlib.get(&built.base_image);
            let mut stdout = String::new();
            for name in candidates {
                let ok = importable.is_some_and(|set| set.contains(name));
                stdout.push_str(if ok { "OK " } else { "FAIL " });
                stdout.push_str(name);
                stdout.push('\n');
            }
            return Ok(RunOutput {
                exit_code: 0,
                stdout: stdout.into_bytes(),
                stderr: Vec::new(),
                duration: Duration::ZERO,
                timed_out: false,
            });
        }

        let script = self
            .scenario
            .outcomes
            .get(&image.snippet_id)
            .ok_or_else(|| {
                RuntimeError::Run(format!("no scripted outcome for `{}`", image.snippet_id))
            })?
            .resolve(&built.base_image, &built.installed);

        let mut stderr = script.stderr.clone();
        if let Some(record) = &script.shim_record {
            if !stderr.is_empty() && !stderr.ends_with('\n') {
                stderr.push('\n');
            }
            stderr.push_str(SENTINEL_PREFIX);
            stderr.push_str(&serde_json::to_string(record).expect("json value serializes"));
            stderr.push('\n');
        }
        let exit_code = if script.timed_out && script.exit_code == 0 {
            137
        } else {
            script.exit_code
        };
        Ok(RunOutput {
            exit_code,
            stdout: script.stdout.clone().into_bytes(),
            stderr: stderr.into_bytes(),
            duration: Duration::from_millis(script.duration_ms),
            timed_out: script.timed_out,
        })
    }

    fn install(
        &self,
        _base_image: &str,
        package: &str,
        _options: &RunOptions,
    ) -> Result<Result<(), String>, RuntimeError> {
        if self.scenario.registry.contains(package) {
            Ok(Ok(()))
        } else {
            Ok(Err(format!(
                "Could not find a version that satisfies the requirement {package}"
            )))
        }
    }

    fn remove_image(&self, image: &ImageRef) {
        self.images
            .lock()
            .unwrap_or_else(|e| e.into_inner())
            .remove(&image.reference);
    }
}
