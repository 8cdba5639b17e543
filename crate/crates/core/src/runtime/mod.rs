//! Container runtime adapters.
//!
//! Every run starts from a freshly built image in a fresh container, with
//! stdin closed. [`DockerRuntime`] drives a container engine through its CLI;
//! [`FakeRuntime`] replays a scripted scenario and never touches a daemon.

mod docker;
mod fake;

use std::path::Path;
use std::time::Duration;

use thiserror::Error;

pub use docker::DockerRuntime;
pub use fake::{FakeRuntime, FakeScenario, ScriptedRun};

#[derive(Debug, Error)]
pub enum RuntimeError {
    #[error("container runtime unavailable: {0}")]
    Unavailable(String),
    #[error("image build failed: {0}")]
    Build(String),
    #[error("container run failed: {0}")]
    Run(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Everything the runtime needs to build one image.
#[derive(Debug, Clone)]
pub struct BuildRequest<'a> {
    /// Directory holding the Dockerfile and every file it `ADD`s.
    pub context_dir: &'a Path,
    pub snippet_id: &'a str,
    /// Image tag to assign (lowercase, engine-safe).
    pub tag: &'a str,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ImageRef {
    pub reference: String,
    pub snippet_id: String,
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub timeout: Duration,
    pub network: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            timeout: Duration::from_secs(60),
            network: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub exit_code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
    pub duration: Duration,
    pub timed_out: bool,
}

pub trait ContainerRuntime: Send + Sync {
    fn name(&self) -> &str;

    /// Fails with [`RuntimeError::Unavailable`] when no engine can be reached.
    fn check_available(&self) -> Result<(), RuntimeError>;

    fn build(&self, request: &BuildRequest<'_>) -> Result<ImageRef, RuntimeError>;

    /// Runs the image's default command once, stdin closed, enforcing the
    /// wall-clock timeout.
    fn run(&self, image: &ImageRef, options: &RunOptions) -> Result<RunOutput, RuntimeError>;

    /// Attempts `pip install <package>` on top of `base_image`.
    /// `Ok(Err(message))` is a package-level failure; `Err` is infrastructure.
    fn install(
        &self,
        base_image: &str,
        package: &str,
        options: &RunOptions,
    ) -> Result<Result<(), String>, RuntimeError>;

    /// Best-effort cleanup of a built image.
    fn remove_image(&self, _image: &ImageRef) {}
}

/// Engine-safe image tag for a snippet build.
pub fn image_tag(snippet_id: &str, suffix: &str) -> String {
    let clean = |s: &str| -> String {
        s.chars()
            .map(|c| {
                if c.is_ascii_alphanumeric() || c == '-' || c == '_' || c == '.' {
                    c.to_ascii_lowercase()
                } else {
                    '-'
                }
            })
            .collect()
    };
    // Ids differing only in case must not share a tag.
    let mut hasher = std::collections::hash_map::DefaultHasher::new();
    std::hash::Hash::hash(snippet_id, &mut hasher);
    let digest = std::hash::Hasher::finish(&hasher) as u32;
    format!(
        "snipharness/{}-{digest:08x}:{}",
        clean(snippet_id),
        clean(suffix)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_are_lowercase() {
        let tag = image_tag("AbC_1", "baseline-v2");
        assert!(tag.starts_with("snipharness/abc_1-"));
        assert!(tag.ends_with(":baseline-v2"));
        assert_eq!(tag, tag.to_ascii_lowercase());
        assert_ne!(image_tag("ab", "x"), image_tag("AB", "x"));
    }
}
