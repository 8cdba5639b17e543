//! Tooling for measuring whether single-file code snippets run as-is, inferring
//! the third-party packages they need, rendering container build files for
//! them, executing them in isolation, and aggregating the failure causes.
//!
//! The pipeline is split into independent modules:
//!
//! - [`store`]: on-disk corpus of snippets, Dockerfiles and the results log.
//! - [`miner`]: enumerates public gists through a REST API by creation-date windows.
//! - [`imports`]: logical-line tokenizer and import-statement extraction.
//! - [`stdlib`]: standard-library manifests used to filter install candidates.
//! - [`infer`]: import-name to package resolution and environment specs.
//! - [`dockerfile`]: deterministic Dockerfile rendering.
//! - [`runtime`]: container runtime adapters (real engine CLI and a scripted fake).
//! - [`harness`]: execution, outcome classification and phase orchestration.
//! - [`report`]: frequency tables, phase-over-phase gains and corpus metrics.

pub mod dockerfile;
pub mod harness;
pub mod imports;
pub mod infer;
pub mod miner;
pub mod outcome;
pub mod report;
pub mod runtime;
pub mod stdlib;
pub mod store;

pub use dockerfile::{render, write_dockerfile, RenderError, RenderMode};
pub use harness::{
    classify_stderr, execute_one, run_phase, Classification, ExecOptions, GatingError, PhaseRun,
};
pub use imports::{extract_imports, split_logical_lines, top_level_names, ImportDecl, LogicalLine};
pub use infer::{
    apply_spec, infer_spec, EnvironmentSpec, InstallReport, LookupStrategy, LookupTable,
    NaiveStrategy, ResolutionStrategy,
};
pub use outcome::{ExecutionOutcome, OutcomeClass, Phase};
pub use report::{
    compute_gain, corpus_metrics, tabulate, CorpusMetrics, CorpusReport, FrequencyTable, Gain,
};
pub use runtime::{ContainerRuntime, DockerRuntime, FakeRuntime};
pub use stdlib::{filter_third_party, StdlibManifest};
pub use store::{SnippetRecord, Store, StoreError};
