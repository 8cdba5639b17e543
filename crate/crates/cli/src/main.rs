//! `snipharness` command-line entry point.

mod commands;
mod failure;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use snipharness_core::Phase;

use crate::failure::{Failure, USAGE};

#[derive(Debug, Parser)]
#[command(
    name = "snipharness",
    version,
    about = "Mine, configure and execute code snippets in containers"
)]
struct Cli {
    /// Corpus directory.
    #[arg(
        long,
        global = true,
        env = "SNIPHARNESS_STORE",
        default_value = "snipharness-store"
    )]
    store: PathBuf,

    /// More log output (repeat for more detail).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Copy a snippet into a directory (default: the working directory).
    Clone(CloneArgs),
    /// Build and execute one snippet, inferring its environment if needed.
    Run(RunArgs),
    /// Enumerate public gists into the store.
    Mine(MineArgs),
    /// Execute a phase over the store and append the outcomes.
    Analyze(AnalyzeArgs),
    /// Summarize recorded outcomes.
    Report(ReportArgs),
}

#[derive(Debug, Args)]
pub struct CloneArgs {
    pub id: String,
    pub location: Option<PathBuf>,
    /// Only look in the local store.
    #[arg(long)]
    pub offline: bool,
    #[command(flatten)]
    pub api: ApiArgs,
}

#[derive(Debug, Args)]
pub struct ApiArgs {
    /// Serve API requests from a directory of recorded exchanges.
    #[arg(long, value_name = "DIR")]
    pub replay: Option<PathBuf>,
    #[arg(long, default_value = snipharness_core::miner::DEFAULT_API_BASE)]
    pub api_base: String,
}

#[derive(Debug, Args)]
pub struct RuntimeArgs {
    /// Use a scripted runtime described by this scenario file.
    #[arg(long, value_name = "SCENARIO")]
    pub fake_runtime: Option<PathBuf>,
    /// Container engine binary.
    #[arg(long, default_value = "docker")]
    pub docker: String,
    /// Per-execution wall-clock limit in seconds.
    #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u64).range(1..))]
    pub timeout: u64,
    /// Disable networking inside containers.
    #[arg(long)]
    pub no_network: bool,
    /// Start snippets through this runner file (copied in as shim.py).
    #[arg(long, value_name = "FILE")]
    pub shim: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum StrategyName {
    Naive,
    Lookup,
}

#[derive(Debug, Args)]
pub struct InferArgs {
    /// Name resolution strategy for imported modules.
    #[arg(long, value_enum, default_value_t = StrategyName::Naive)]
    pub strategy: StrategyName,
    /// Module-to-package table (TSV) for the lookup strategy.
    #[arg(long, value_name = "TSV")]
    pub lookup_table: Option<PathBuf>,
    /// Install the first dotted component instead of the full module path.
    #[arg(long)]
    pub top_level: bool,
    /// Standard-library manifest to filter with (default: bundled for the image).
    #[arg(long, value_name = "JSON")]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    pub id: String,
    /// Fail instead of inferring when no Dockerfile is stored.
    #[arg(long)]
    pub no_infer: bool,
    #[arg(long, default_value = snipharness_core::outcome::PYTHON2_IMAGE)]
    pub base_image: String,
    #[command(flatten)]
    pub runtime: RuntimeArgs,
    #[command(flatten)]
    pub infer: InferArgs,
}

#[derive(Debug, Args)]
pub struct MineArgs {
    /// Window start (RFC 3339 timestamp or YYYY-MM-DD).
    #[arg(long)]
    pub since: String,
    /// Window end, exclusive (default: now).
    #[arg(long)]
    pub until: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub min_stars: u64,
    #[arg(long, default_value = "Python")]
    pub language: String,
    /// Stop after this many accepted snippets.
    #[arg(long, default_value_t = 1000)]
    pub max: usize,
    #[arg(long, default_value_t = 100)]
    pub page_size: u32,
    #[command(flatten)]
    pub api: ApiArgs,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub phase: Phase,
    /// File listing snippet ids, one per line (default: the whole store).
    #[arg(long, value_name = "FILE")]
    pub ids: Option<PathBuf>,
    /// Base image (default: the phase's pinned interpreter image).
    #[arg(long)]
    pub base_image: Option<String>,
    /// Concurrent executions (default: number of CPUs).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
    #[command(flatten)]
    pub runtime: RuntimeArgs,
    #[command(flatten)]
    pub infer: InferArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Phases to tabulate (default: every phase with results).
    #[arg(long)]
    pub phase: Vec<Phase>,
    /// Phase pair `FROM:TO` to compute the ImportError gain for.
    #[arg(long, value_name = "FROM:TO")]
    pub gain: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Include corpus metrics (size, mean lines of code, unique packages).
    #[arg(long)]
    pub metrics: bool,
    /// Image whose standard library is excluded from the package count.
    #[arg(long, default_value = snipharness_core::outcome::PYTHON2_IMAGE)]
    pub base_image: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_timestamp(None)
        .init();

    let result = match &cli.command {
        Command::Clone(args) => commands::clone(&cli.store, args),
        Command::Run(args) => commands::run(&cli.store, args),
        Command::Mine(args) => commands::mine(&cli.store, args),
        Command::Analyze(args) => commands::analyze(&cli.store, args),
        Command::Report(args) => commands::report(&cli.store, args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
