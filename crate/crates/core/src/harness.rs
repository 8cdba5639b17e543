//! Execution harness: build, run, classify, and orchestrate evaluation phases.

use std::collections::HashMap;
use std::fs;
use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use serde::Deserialize;
use thiserror::Error;

use crate::dockerfile::{render_with, write_dockerfile, RenderMode, SHIM_FILE};
use crate::infer::{apply_spec, infer_spec, EnvironmentSpec, ResolutionStrategy};
use crate::outcome::{tail, ExecutionOutcome, OutcomeClass, Phase};
use crate::runtime::{image_tag, BuildRequest, ContainerRuntime, RunOptions, RunOutput};
use crate::stdlib::StdlibManifest;
use crate::store::{SnippetRecord, Store, StoreError};

/// Prefix of the runner's structured result line on stderr.
pub const SENTINEL_PREFIX: &str = "SNIPHARNESS_RESULT:";

pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(60);

#[derive(Debug, Clone)]
pub struct ExecOptions {
    pub timeout: Duration,
    pub network: bool,
    pub mode: RenderMode,
    /// Runner file copied into the build context in [`RenderMode::Shim`].
    pub shim_path: Option<PathBuf>,
}

impl Default for ExecOptions {
    fn default() -> Self {
        ExecOptions {
            timeout: DEFAULT_TIMEOUT,
            network: true,
            mode: RenderMode::Direct,
            shim_path: None,
        }
    }
}

impl ExecOptions {
    pub fn run_options(&self) -> RunOptions {
        RunOptions {
            timeout: self.timeout,
            network: self.network,
        }
    }
}

/// Result record emitted by the in-container runner.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct ShimRecord {
    pub status: String,
    #[serde(default)]
    pub exception_name: Option<String>,
    #[serde(default)]
    pub exception_message: Option<String>,
}

/// Splits a trailing sentinel line off `stderr`. Only the final non-empty
/// line is considered.
pub fn parse_shim_record(stderr: &str) -> Option<(ShimRecord, &str)> {
    let trimmed = stderr.trim_end_matches(['\n', '\r']);
    let start = trimmed.rfind('\n').map_or(0, |i| i + 1);
    let json = trimmed[start..].strip_prefix(SENTINEL_PREFIX)?;
    let record: ShimRecord = serde_json::from_str(json.trim()).ok()?;
    Some((record, &stderr[..start]))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub outcome_class: OutcomeClass,
    pub exception_name: Option<String>,
    pub message: String,
}

impl Classification {
    fn new(class: OutcomeClass, name: Option<String>, message: impl Into<String>) -> Self {
        Classification {
            outcome_class: class,
            exception_name: name,
            message: message.into(),
        }
    }
}

/// `Name` or `Name: message` at column zero, where Name may be dotted.
fn exception_line(line: &str) -> Option<(&str, &str)> {
    if line.starts_with(char::is_whitespace) {
        return None;
    }
    let (name, message) = match line.find(':') {
        Some(i) => (&line[..i], line[i + 1..].trim()),
        None => (line.trim_end(), ""),
    };
    let valid = !name.is_empty()
        && name.split('.').all(|part| {
            let mut chars = part.chars();
            chars.next().is_some_and(|c| c == '_' || c.is_alphabetic())
                && chars.all(|c| c == '_' || c.is_alphanumeric())
        });
    valid.then_some((name, message))
}

/// Outside a traceback block only names shaped like exception classes count.
fn looks_like_exception(name: &str) -> bool {
    let short = short_name(name);
    ["Error", "Exception", "Exit", "Interrupt", "Warning"]
        .iter()
        .any(|suffix| short.ends_with(suffix))
        || matches!(short, "StopIteration" | "GeneratorExit")
}

fn short_name(name: &str) -> &str {
    name.rsplit('.').next().unwrap_or(name)
}

/// Classifies a run from its stderr traceback and exit code alone.
///
/// The last exception line of the final traceback block names the class.
/// Syntax errors raised while compiling the main file print no traceback
/// header, so a `File "...", line N` frame followed by an `...Error` line is
/// accepted too, as is a lone final `SomeError: message` line. Exit 0 is Success; any other exit without a recognizable
/// exception is coded as `SystemExit`, which is how the interpreter reports
/// `sys.exit("message")`.
pub fn classify_stderr(stderr: &str, exit_code: i32) -> Classification {
    if exit_code == 0 {
        return Classification::new(OutcomeClass::Success, None, "");
    }
    let lines: Vec<&str> = stderr.lines().map(|l| l.trim_end_matches('\r')).collect();

    if let Some(header) = lines
        .iter()
        .rposition(|l| l.starts_with("Traceback (most recent call last):"))
    {
        if let Some((name, message)) = lines[header + 1..]
            .iter()
            .rev()
            .find_map(|l| exception_line(l))
        {
            return Classification::new(
                OutcomeClass::exception(short_name(name)),
                Some(name.to_string()),
                message,
            );
        }
    }

    let frame = lines
        .iter()
        .rposition(|l| l.trim_start().starts_with("File \"") && l.starts_with(char::is_whitespace));
    if let Some(frame) = frame {
        let found = lines[frame + 1..]
            .iter()
            .rev()
            .find_map(|l| exception_line(l).filter(|(name, _)| looks_like_exception(name)));
        if let Some((name, message)) = found {
            return Classification::new(
                OutcomeClass::exception(short_name(name)),
                Some(name.to_string()),
                message,
            );
        }
    }

    let last = lines
        .iter()
        .rev()
        .find(|l| !l.trim().is_empty())
        .copied()
        .unwrap_or("");
    if last.contains(':') {
        if let Some((name, message)) =
            exception_line(last).filter(|(name, _)| looks_like_exception(name))
        {
            return Classification::new(
                OutcomeClass::exception(short_name(name)),
                Some(name.to_string()),
                message,
            );
        }
    }
    let message = last;
    Classification::new(
        OutcomeClass::exception("SystemExit"),
        Some("SystemExit".into()),
        message,
    )
}

/// Classifies a finished run: timeout first, then the runner record, then
/// the traceback fallback.
pub fn classify_run(output: &RunOutput, timeout: Duration) -> Classification {
    if output.timed_out {
        return Classification::new(
            OutcomeClass::Timeout,
            None,
            format!("timed out after {} ms", timeout.as_millis()),
        );
    }
    let stderr = String::from_utf8_lossy(&output.stderr);
    match parse_shim_record(&stderr) {
        Some((record, _)) if record.status == "success" => {
            if output.exit_code == 0 {
                Classification::new(OutcomeClass::Success, None, "")
            } else {
                Classification::new(
                    OutcomeClass::Infra,
                    None,
                    format!(
                        "runner reported success but container exited {}",
                        output.exit_code
                    ),
                )
            }
        }
        Some((record, _)) => {
            let name = record
                .exception_name
                .unwrap_or_else(|| "ShimInternalError".into());
            let message = record.exception_message.unwrap_or_default();
            if name == "SystemExit" && output.exit_code == 0 {
                Classification::new(OutcomeClass::Success, Some(name), message)
            } else {
                Classification::new(
                    OutcomeClass::exception(short_name(&name)),
                    Some(name),
                    message,
                )
            }
        }
        None => classify_stderr(&stderr, output.exit_code),
    }
}

fn infra_outcome(record: &SnippetRecord, phase: Phase, message: String) -> ExecutionOutcome {
    ExecutionOutcome {
        snippet_id: record.id.clone(),
        phase,
        outcome_class: OutcomeClass::Infra,
        exception_name: None,
        exception_message: message,
        exit_code: -1,
        duration_ms: 0,
        stdout_tail: String::new(),
        stderr_tail: String::new(),
        install_report: None,
    }
}

/// Renders `spec`, builds and runs it once.
pub fn execute_one(
    record: &SnippetRecord,
    spec: &EnvironmentSpec,
    runtime: &dyn ContainerRuntime,
    phase: Phase,
    options: &ExecOptions,
) -> ExecutionOutcome {
    match render_with(spec, options.mode) {
        Ok(dockerfile) => execute_dockerfile(record, &dockerfile, runtime, phase, options),
        Err(e) => infra_outcome(record, phase, format!("cannot render Dockerfile: {e}")),
    }
}

/// Builds a context holding `dockerfile`, the snippet and (in shim mode) the
/// runner, then runs it in a fresh container.
pub fn execute_dockerfile(
    record: &SnippetRecord,
    dockerfile: &str,
    runtime: &dyn ContainerRuntime,
    phase: Phase,
    options: &ExecOptions,
) -> ExecutionOutcome {
    let context = match prepare_context(record, dockerfile, options) {
        Ok(dir) => dir,
        Err(message) => return infra_outcome(record, phase, message),
    };
    let tag = image_tag(&record.id, phase.as_str());
    let image = match runtime.build(&BuildRequest {
        context_dir: context.path(),
        snippet_id: &record.id,
        tag: &tag,
    }) {
        Ok(image) => image,
        Err(e) => return infra_outcome(record, phase, e.to_string()),
    };
    let result = runtime.run(&image, &options.run_options());
    runtime.remove_image(&image);
    let output = match result {
        Ok(output) => output,
        Err(e) => return infra_outcome(record, phase, e.to_string()),
    };

    let class = classify_run(&output, options.timeout);
    let stderr = String::from_utf8_lossy(&output.stderr);
    let visible_stderr = parse_shim_record(&stderr).map_or(&*stderr, |(_, rest)| rest);
    ExecutionOutcome {
        snippet_id: record.id.clone(),
        phase,
        outcome_class: class.outcome_class,
        exception_name: class.exception_name,
        exception_message: class.message,
        exit_code: output.exit_code,
        duration_ms: output.duration.as_millis() as u64,
        stdout_tail: tail(&String::from_utf8_lossy(&output.stdout)),
        stderr_tail: tail(visible_stderr),
        install_report: None,
    }
}

fn prepare_context(
    record: &SnippetRecord,
    dockerfile: &str,
    options: &ExecOptions,
) -> Result<tempfile::TempDir, String> {
    let dir = tempfile::tempdir().map_err(|e| format!("cannot create build context: {e}"))?;
    let write = |name: &str, bytes: &[u8]| {
        fs::write(dir.path().join(name), bytes)
            .map_err(|e| format!("cannot write {name} to build context: {e}"))
    };
    write("Dockerfile", dockerfile.as_bytes())?;
    write(&record.stored_filename(), record.source.as_bytes())?;
    if options.mode == RenderMode::Shim {
        let path = options
            .shim_path
            .as_ref()
            .ok_or_else(|| "shim mode needs a runner file".to_string())?;
        let shim =
            fs::read(path).map_err(|e| format!("cannot read runner {}: {e}", path.display()))?;
        write(SHIM_FILE, &shim)?;
    }
    Ok(dir)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GatingReason {
    UnknownSnippet,
    NoBaseline,
    NotImportError(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{id}: not eligible for {phase}: {}", describe(.reason))]
pub struct GatingError {
    pub id: String,
    pub phase: Phase,
    pub reason: GatingReason,
}

fn describe(reason: &GatingReason) -> String {
    match reason {
        GatingReason::UnknownSnippet => "unknown snippet id".into(),
        GatingReason::NoBaseline => "no baseline-v2 result".into(),
        GatingReason::NotImportError(class) => {
            format!("baseline-v2 outcome was {class}, not ImportError")
        }
    }
}

#[derive(Debug, Error)]
pub enum PhaseError {
    #[error("{0} needs baseline-v2 results; run that phase first")]
    NoGatingData(Phase),
    #[error("worker count must be positive")]
    NoWorkers,
    #[error(transparent)]
    Store(#[from] StoreError),
}

pub struct PhaseConfig<'a> {
    pub phase: Phase,
    pub base_image: String,
    pub strategy: &'a dyn ResolutionStrategy,
    pub manifest: &'a StdlibManifest,
    pub exec: ExecOptions,
    pub workers: usize,
}

#[derive(Debug, Default)]
pub struct PhaseRun {
    /// One outcome per eligible id, in input order.
    pub outcomes: Vec<ExecutionOutcome>,
    pub rejected: Vec<GatingError>,
}

/// Latest outcome class per id for `phase`.
pub fn latest_classes(results: &[ExecutionOutcome], phase: Phase) -> HashMap<String, OutcomeClass> {
    results
        .iter()
        .filter(|o| o.phase == phase)
        .map(|o| (o.snippet_id.clone(), o.outcome_class.clone()))
        .collect()
}

/// Runs `ids` through one phase on a pool of `config.workers` threads,
/// appending every outcome to the store's results log.
pub fn run_phase(
    ids: &[String],
    config: &PhaseConfig<'_>,
    runtime: &dyn ContainerRuntime,
    store: &Store,
) -> Result<PhaseRun, PhaseError> {
    if config.workers == 0 {
        return Err(PhaseError::NoWorkers);
    }
    let gate = match config.phase.gating_phase() {
        Some(gating) => {
            let classes = latest_classes(&store.read_results()?, gating);
            if classes.is_empty() {
                return Err(PhaseError::NoGatingData(config.phase));
            }
            Some(classes)
        }
        None => None,
    };

    let mut run = PhaseRun::default();
    let mut eligible = Vec::new();
    for id in ids {
        let reject = |reason| GatingError {
            id: id.clone(),
            phase: config.phase,
            reason,
        };
        let record = match store.get_snippet(id) {
            Ok(record) => record,
            Err(StoreError::NotFound(_)) => {
                run.rejected.push(reject(GatingReason::UnknownSnippet));
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        if let Some(classes) = &gate {
            match classes.get(id) {
                None => {
                    run.rejected.push(reject(GatingReason::NoBaseline));
                    continue;
                }
                Some(class) if !class.is_import_error_family() => {
                    run.rejected
                        .push(reject(GatingReason::NotImportError(class.to_string())));
                    continue;
                }
                Some(_) => {}
            }
        }
        eligible.push(record);
    }

    let slots: Vec<Mutex<Option<ExecutionOutcome>>> =
        eligible.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let append_errors: Mutex<Vec<StoreError>> = Mutex::new(Vec::new());
    let workers = config.workers.min(eligible.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(record) = eligible.get(i) else { break };
                let outcome = evaluate(record, config, runtime, store);
                if let Err(e) = store.append_result(&outcome) {
                    append_errors
                        .lock()
                        .unwrap_or_else(|e| e.into_inner())
                        .push(e);
                }
                *slots[i].lock().unwrap_or_else(|e| e.into_inner()) = Some(outcome);
            });
        }
    });
    if let Some(e) = append_errors
        .into_inner()
        .unwrap_or_else(|e| e.into_inner())
        .into_iter()
        .next()
    {
        return Err(e.into());
    }
    run.outcomes = slots
        .into_iter()
        .map(|slot| {
            slot.into_inner()
                .unwrap_or_else(|e| e.into_inner())
                .expect("every slot filled")
        })
        .collect();
    Ok(run)
}

fn evaluate(
    record: &SnippetRecord,
    config: &PhaseConfig<'_>,
    runtime: &dyn ContainerRuntime,
    store: &Store,
) -> ExecutionOutcome {
    if !config.phase.is_post_inference() {
        let spec = EnvironmentSpec::bare(&config.base_image, record.stored_filename());
        return execute_one(record, &spec, runtime, config.phase, &config.exec);
    }
    let inferred = infer_spec(record, config.manifest, config.strategy, &config.base_image);
    let report = match apply_spec(&inferred, runtime, &config.exec.run_options()) {
        Ok(report) => report,
        Err(e) => {
            return infra_outcome(
                record,
                config.phase,
                format!("package installation failed: {e}"),
            )
        }
    };
    let spec = inferred.with_installed(&report);
    if let Err(e) = write_dockerfile(&record.id, &spec, store) {
        log::warn!("{}: could not store Dockerfile: {e}", record.id);
    }
    let mut outcome = execute_one(record, &spec, runtime, config.phase, &config.exec);
    outcome.install_report = Some(report);
    outcome
}
