use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use chrono::{DateTime, NaiveDate, Utc};
use snipharness_core::dockerfile::{render_with, write_dockerfile, RenderMode};
use snipharness_core::harness::{execute_dockerfile, run_phase, ExecOptions, PhaseConfig};
use snipharness_core::miner::{
    mine_with, single_file_record, ApiClient, HttpClient, MineQuery, MineStrategy, ReplayClient,
    RetryPolicy,
};
use snipharness_core::outcome::ExecutionOutcome;
use snipharness_core::report::{compute_gain, corpus_metrics, tabulate, CorpusReport};
use snipharness_core::stdlib::{probe_manifest, ManifestMethod};
use snipharness_core::store::DOCKERFILE;
use snipharness_core::{
    apply_spec, extract_imports, infer_spec, ContainerRuntime, DockerRuntime, FakeRuntime,
    LookupStrategy, LookupTable, NaiveStrategy, OutcomeClass, Phase, ResolutionStrategy,
    StdlibManifest, Store,
};

use crate::failure::{Failure, NOT_FOUND, NO_SPEC, RUNTIME_UNAVAILABLE};
use crate::{
    AnalyzeArgs, ApiArgs, CloneArgs, Format, InferArgs, MineArgs, ReportArgs, RunArgs, RuntimeArgs,
    StrategyName,
};

type CmdResult = Result<u8, Failure>;

fn open_store(path: &Path) -> Result<Store, Failure> {
    Ok(Store::open(path)?)
}

fn api_client(args: &ApiArgs) -> Result<Box<dyn ApiClient>, Failure> {
    Ok(match &args.replay {
        Some(dir) => Box::new(ReplayClient::from_dir(dir)?),
        None => Box::new(HttpClient::new(args.api_base.clone())?),
    })
}

fn runtime(args: &RuntimeArgs) -> Result<Box<dyn ContainerRuntime>, Failure> {
    let runtime: Box<dyn ContainerRuntime> = match &args.fake_runtime {
        Some(path) => Box::new(FakeRuntime::from_file(path).map_err(|e| match e {
            snipharness_core::runtime::RuntimeError::Io(io) => {
                Failure::io(format!("cannot read scenario {}: {io}", path.display()))
            }
            other => Failure::usage(other.to_string()),
        })?),
        None => Box::new(DockerRuntime::new(args.docker.clone())),
    };
    runtime.check_available().map_err(|e| {
        Failure::new(
            RUNTIME_UNAVAILABLE,
            format!("{e}\nhint: start the container engine, or pass --fake-runtime <scenario.json> for scripted runs"),
        )
    })?;
    Ok(runtime)
}

fn exec_options(args: &RuntimeArgs) -> ExecOptions {
    ExecOptions {
        timeout: Duration::from_secs(args.timeout),
        network: !args.no_network,
        mode: if args.shim.is_some() {
            RenderMode::Shim
        } else {
            RenderMode::Direct
        },
        shim_path: args.shim.clone(),
    }
}

fn strategy(args: &InferArgs) -> Result<Box<dyn ResolutionStrategy>, Failure> {
    Ok(match args.strategy {
        StrategyName::Naive => Box::new(NaiveStrategy {
            top_level: args.top_level,
        }),
        StrategyName::Lookup => {
            let table = match &args.lookup_table {
                Some(path) => LookupTable::load(path).map_err(|e| Failure::usage(e.to_string()))?,
                None => LookupTable::starter(),
            };
            Box::new(LookupStrategy {
                table,
                top_level: args.top_level,
            })
        }
    })
}

/// Explicit manifest file, else the bundled one for `base_image`.
fn known_manifest(args: &InferArgs, base_image: &str) -> Result<Option<StdlibManifest>, Failure> {
    match &args.manifest {
        Some(path) => StdlibManifest::load(path)
            .map(Some)
            .map_err(|e| Failure::io(e.to_string())),
        None => Ok(StdlibManifest::bundled(base_image)),
    }
}

/// Probes `base_image` for the top-level names imported by `records`.
fn probed_manifest(
    base_image: &str,
    sources: impl Iterator<Item = String>,
    runtime: &dyn ContainerRuntime,
) -> Result<StdlibManifest, Failure> {
    let candidates: BTreeSet<String> = sources
        .flat_map(|src| extract_imports(&src))
        .filter_map(|d| d.top_level().map(str::to_string))
        .collect();
    if candidates.is_empty() {
        return Ok(empty_manifest(base_image));
    }
    log::info!(
        "no bundled manifest for {base_image}; probing {} names",
        candidates.len()
    );
    probe_manifest(base_image, &candidates, runtime).map_err(|e| {
        Failure::new(
            RUNTIME_UNAVAILABLE,
            format!("cannot probe {base_image}: {e}"),
        )
    })
}

fn empty_manifest(base_image: &str) -> StdlibManifest {
    StdlibManifest {
        base_image: base_image.to_string(),
        method: ManifestMethod::Probe,
        generated_at: Utc::now(),
        modules: BTreeSet::new(),
    }
}

fn post_inference_phase(base_image: &str) -> Phase {
    if base_image.starts_with("python:3") {
        Phase::PostInferenceV3
    } else {
        Phase::PostInferenceV2
    }
}

pub fn clone(store_dir: &Path, args: &CloneArgs) -> CmdResult {
    let store = open_store(store_dir)?;
    if !store.contains(&args.id) {
        if args.offline {
            return Err(Failure::new(
                NOT_FOUND,
                format!("snippet `{}` is not in {}", args.id, store_dir.display()),
            ));
        }
        let client = api_client(&args.api)?;
        let gist = client.fetch(&args.id)?;
        let record = single_file_record(&gist).ok_or_else(|| {
            Failure::new(
                NOT_FOUND,
                format!("gist `{}` is not a single-file snippet", args.id),
            )
        })?;
        store.put_snippet(&record)?;
    }
    let source = store.snippet_path(&args.id)?;
    let location = args.location.clone().unwrap_or_else(|| PathBuf::from("."));
    fs::create_dir_all(&location)
        .map_err(|e| Failure::io(format!("cannot create {}: {e}", location.display())))?;
    let target = location.join(source.file_name().expect("snippet path has a file name"));
    fs::copy(&source, &target)
        .map_err(|e| Failure::io(format!("cannot write {}: {e}", target.display())))?;
    println!("{}", target.display());
    Ok(0)
}

fn base_of(dockerfile: &str) -> Option<&str> {
    dockerfile
        .lines()
        .find_map(|l| l.trim().strip_prefix("FROM "))
        .map(str::trim)
}

pub fn run(store_dir: &Path, args: &RunArgs) -> CmdResult {
    let store = open_store(store_dir)?;
    let record = store.get_snippet(&args.id)?;
    let stored = store.read_artifact(&args.id, DOCKERFILE)?;
    if stored.is_none() && args.no_infer {
        return Err(Failure::new(
            NO_SPEC,
            format!(
                "no Dockerfile stored for `{}` and inference is disabled",
                args.id
            ),
        ));
    }
    let runtime = runtime(&args.runtime)?;
    let options = exec_options(&args.runtime);

    let (dockerfile, phase) = match stored {
        Some(text) => {
            if options.mode == RenderMode::Shim {
                log::warn!("using the stored Dockerfile as is; the runner is only wired into generated files");
            }
            let phase = post_inference_phase(base_of(&text).unwrap_or(&args.base_image));
            (text, phase)
        }
        None => {
            let manifest = match known_manifest(&args.infer, &args.base_image)? {
                Some(m) => m,
                None => probed_manifest(
                    &args.base_image,
                    std::iter::once(record.source.clone()),
                    runtime.as_ref(),
                )?,
            };
            let strategy = strategy(&args.infer)?;
            let inferred = infer_spec(&record, &manifest, strategy.as_ref(), &args.base_image);
            let report = apply_spec(&inferred, runtime.as_ref(), &options.run_options())?;
            for entry in &report.entries {
                eprintln!("install {}: {:?}", entry.package, entry.status);
            }
            let spec = inferred.with_installed(&report);
            let path = write_dockerfile(&record.id, &spec, &store)
                .map_err(|e| Failure::io(e.to_string()))?;
            eprintln!("wrote {}", path.display());
            let text = render_with(&spec, options.mode).map_err(|e| Failure::io(e.to_string()))?;
            (text, post_inference_phase(&args.base_image))
        }
    };

    let outcome = execute_dockerfile(&record, &dockerfile, runtime.as_ref(), phase, &options);
    print!("{}", outcome.stdout_tail);
    eprint!("{}", outcome.stderr_tail);
    print_outcome(&outcome);
    Ok(if outcome.outcome_class == OutcomeClass::Success {
        0
    } else {
        NOT_FOUND
    })
}

fn print_outcome(outcome: &ExecutionOutcome) {
    if outcome.exception_message.is_empty() {
        println!("{}", outcome.outcome_class);
    } else {
        println!("{}: {}", outcome.outcome_class, outcome.exception_message);
    }
}

fn parse_time(text: &str) -> Result<DateTime<Utc>, Failure> {
    if let Ok(t) = DateTime::parse_from_rfc3339(text) {
        return Ok(t.with_timezone(&Utc));
    }
    NaiveDate::parse_from_str(text, "%Y-%m-%d")
        .map(|d| d.and_hms_opt(0, 0, 0).expect("midnight exists").and_utc())
        .map_err(|_| {
            Failure::usage(format!(
                "cannot parse `{text}` as an RFC 3339 timestamp or YYYY-MM-DD date"
            ))
        })
}

pub fn mine(store_dir: &Path, args: &MineArgs) -> CmdResult {
    let query = MineQuery {
        language_tag: args.language.clone(),
        min_stars: args.min_stars,
        window_start: parse_time(&args.since)?,
        window_end: match &args.until {
            Some(t) => parse_time(t)?,
            None => Utc::now(),
        },
        max_records: args.max,
        page_size: args.page_size,
    };
    query
        .validate()
        .map_err(|e| Failure::usage(e.to_string()))?;
    let store = open_store(store_dir)?;
    let client = api_client(&args.api)?;
    // Recorded exchanges answer instantly; waiting between retries buys nothing.
    let retry = if args.api.replay.is_some() {
        RetryPolicy::immediate()
    } else {
        RetryPolicy::default()
    };
    match mine_with(
        MineStrategy::DateWindow,
        &query,
        client.as_ref(),
        &store,
        retry,
    ) {
        Ok(count) => {
            println!("mined {count}");
            Ok(0)
        }
        Err(failure) => {
            println!("mined {}", failure.stored);
            Err(failure.into())
        }
    }
}

fn read_id_list(path: &Path) -> Result<Vec<String>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::io(format!("cannot read {}: {e}", path.display())))?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect())
}

pub fn analyze(store_dir: &Path, args: &AnalyzeArgs) -> CmdResult {
    let store = open_store(store_dir)?;
    let ids = match &args.ids {
        Some(path) => read_id_list(path)?,
        None => store.list_ids()?,
    };
    let base_image = args
        .base_image
        .clone()
        .unwrap_or_else(|| args.phase.default_image().to_string());
    let runtime = runtime(&args.runtime)?;
    let manifest = match known_manifest(&args.infer, &base_image)? {
        Some(m) => m,
        None if args.phase.is_post_inference() => {
            let sources = ids
                .iter()
                .filter_map(|id| store.get_snippet(id).ok())
                .map(|r| r.source);
            probed_manifest(&base_image, sources, runtime.as_ref())?
        }
        None => empty_manifest(&base_image),
    };
    let strategy = strategy(&args.infer)?;
    let workers = match args.workers {
        Some(n) => n as usize,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let config = PhaseConfig {
        phase: args.phase,
        base_image,
        strategy: strategy.as_ref(),
        manifest: &manifest,
        exec: exec_options(&args.runtime),
        workers,
    };
    let run = run_phase(&ids, &config, runtime.as_ref(), &store)?;
    for rejected in &run.rejected {
        eprintln!("skipped {rejected}");
    }
    for outcome in &run.outcomes {
        println!("{}\t{}", outcome.snippet_id, outcome.outcome_class);
    }
    eprintln!(
        "{}: {} executed, {} skipped; results in {}",
        args.phase,
        run.outcomes.len(),
        run.rejected.len(),
        store.results_path().display()
    );
    Ok(0)
}

fn parse_gain(text: &str) -> Result<(Phase, Phase), Failure> {
    let (from, to) = text
        .split_once(':')
        .ok_or_else(|| Failure::usage(format!("--gain expects FROM:TO, got `{text}`")))?;
    let parse = |s: &str| s.parse::<Phase>().map_err(Failure::usage);
    Ok((parse(from)?, parse(to)?))
}

pub fn report(store_dir: &Path, args: &ReportArgs) -> CmdResult {
    let store = open_store(store_dir)?;
    let gains = args
        .gain
        .iter()
        .map(|g| parse_gain(g))
        .collect::<Result<Vec<_>, _>>()?;
    let results = store.read_results()?;
    let phases: Vec<Phase> = if args.phase.is_empty() {
        Phase::ALL
            .into_iter()
            .filter(|p| results.iter().any(|o| o.phase == *p))
            .collect()
    } else {
        args.phase.clone()
    };
    let mut report = CorpusReport {
        tables: phases.iter().map(|p| tabulate(&results, *p)).collect(),
        gains: Vec::new(),
        metrics: None,
    };
    for (from, to) in gains {
        report.gains.push(compute_gain(&results, from, to)?);
    }
    if args.metrics {
        let manifest = StdlibManifest::bundled(&args.base_image).ok_or_else(|| {
            Failure::usage(format!("no bundled manifest for {}", args.base_image))
        })?;
        report.metrics = Some(corpus_metrics(&store, &manifest)?);
    }
    match args.format {
        Format::Text => print!("{}", report.render_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gain_argument() {
        assert_eq!(
            parse_gain("baseline-v2:post-inference-v2").unwrap(),
            (Phase::BaselineV2, Phase::PostInferenceV2)
        );
        assert_eq!(
            parse_gain("baseline-v2").unwrap_err().code,
            crate::failure::USAGE
        );
        assert_eq!(
            parse_gain("baseline-v2:nope").unwrap_err().code,
            crate::failure::USAGE
        );
    }

    #[test]
    fn times() {
        assert_eq!(
            parse_time("2017-01-01").unwrap().to_rfc3339(),
            "2017-01-01T00:00:00+00:00"
        );
        assert_eq!(
            parse_time("2017-01-01T05:00:00+01:00")
                .unwrap()
                .to_rfc3339(),
            "2017-01-01T04:00:00+00:00"
        );
        assert!(parse_time("yesterday").is_err());
    }

    #[test]
    fn phases_follow_the_image() {
        assert_eq!(post_inference_phase("python:3.6.5"), Phase::PostInferenceV3);
        assert_eq!(
            post_inference_phase("python:2.7.13"),
            Phase::PostInferenceV2
        );
        assert_eq!(base_of("FROM python:3.6.5\nCMD x\n"), Some("python:3.6.5"));
    }
}
