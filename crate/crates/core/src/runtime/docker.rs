use std::io::Read;
use std::process::{Child, Command, Stdio};
use std::sync::atomic::{AtomicU64, Ordering};
use std::thread;
use std::time::{Duration, Instant};

use super::{BuildRequest, ContainerRuntime, ImageRef, RunOptions, RunOutput, RuntimeError};

const POLL_INTERVAL: Duration = Duration::from_millis(50);
const INSTALL_TIMEOUT: Duration = Duration::from_secs(600);

/// Adapter for a Docker-compatible engine CLI (`docker`, `podman`).
#[derive(Debug)]
pub struct DockerRuntime {
    binary: String,
    counter: AtomicU64,
}

impl Default for DockerRuntime {
    fn default() -> Self {
        DockerRuntime::new("docker")
    }
}

struct Captured {
    status: Option<i32>,
    stdout: Vec<u8>,
    stderr: Vec<u8>,
    duration: Duration,
    timed_out: bool,
}

impl DockerRuntime {
    pub fn new(binary: impl Into<String>) -> Self {
        DockerRuntime {
            binary: binary.into(),
            counter: AtomicU64::new(0),
        }
    }

    fn container_name(&self) -> String {
        let n = self.counter.fetch_add(1, Ordering::Relaxed);
        format!("snipharness-{}-{n}", std::process::id())
    }

    fn spawn(&self, args: &[&str]) -> Result<Child, RuntimeError> {
        Command::new(&self.binary)
            .args(args)
            .stdin(Stdio::null())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .map_err(|e| {
                RuntimeError::Unavailable(format!("cannot execute `{}`: {e}", self.binary))
            })
    }

    /// Runs the engine CLI to completion, killing `container` (if named) when
    /// `timeout` elapses.
    fn capture(
        &self,
        args: &[&str],
        timeout: Duration,
        container: Option<&str>,
    ) -> Result<Captured, RuntimeError> {
        let started = Instant::now();
        let mut child = self.spawn(args)?;
        let mut out = child.stdout.take().expect("stdout piped");
        let mut err = child.stderr.take().expect("stderr piped");
        let out_reader = thread::spawn(move || {
            let mut buf = Vec::new();
            let _ = out.read_to_end(&mut buf);
            buf
        });
        let err_reader = thread::spawn(move || {
            let mut buf = Vec::new();
            let _ = err.read_to_end(&mut buf);
            buf
        });

        let mut timed_out = false;
        let status = loop {
            if let Some(status) = child.try_wait()? {
                break status;
            }
            if started.elapsed() >= timeout {
                timed_out = true;
                if let Some(name) = container {
                    let _ = Command::new(&self.binary)
                        .args(["kill", name])
                        .stdout(Stdio::null())
                        .stderr(Stdio::null())
                        .status();
                }
                let _ = child.kill();
                break child.wait()?;
            }
            thread::sleep(POLL_INTERVAL);
        };
        let stdout = out_reader.join().unwrap_or_default();
        let stderr = err_reader.join().unwrap_or_default();
        Ok(Captured {
            status: status.code(),
            stdout,
            stderr,
            duration: started.elapsed(),
            timed_out,
        })
    }
}

fn last_lines(bytes: &[u8], n: usize) -> String {
    let text = String::from_utf8_lossy(bytes);
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    lines[lines.len().saturating_sub(n)..].join("\n")
}

impl ContainerRuntime for DockerRuntime {
    fn name(&self) -> &str {
        &self.binary
    }

    fn check_available(&self) -> Result<(), RuntimeError> {
        let out = self.capture(&["version"], Duration::from_secs(30), None)?;
        if out.status == Some(0) {
            Ok(())
        } else {
            Err(RuntimeError::Unavailable(format!(
                "`{} version` failed: {}",
                self.binary,
                last_lines(&out.stderr, 3)
            )))
        }
    }

    fn build(&self, request: &BuildRequest<'_>) -> Result<ImageRef, RuntimeError> {
        let context = request.context_dir.to_string_lossy();
        let out = self.capture(
            &["build", "-q", "-t", request.tag, &context],
            INSTALL_TIMEOUT,
            None,
        )?;
        if out.status != Some(0) || out.timed_out {
            return Err(RuntimeError::Build(last_lines(&out.stderr, 10)));
        }
        Ok(ImageRef {
            reference: request.tag.to_string(),
            snippet_id: request.snippet_id.to_string(),
        })
    }

    fn run(&self, image: &ImageRef, options: &RunOptions) -> Result<RunOutput, RuntimeError> {
        let name = self.container_name();
        let mut args = vec!["run", "--rm", "--name", name.as_str()];
        if !options.network {
            args.extend(["--network", "none"]);
        }
        args.push(&image.reference);
        let out = self.capture(&args, options.timeout, Some(&name))?;
        // 125 is the engine's own failure (bad image, daemon error), not the snippet's.
        if out.status == Some(125) && !out.timed_out {
            return Err(RuntimeError::Run(last_lines(&out.stderr, 5)));
        }
        Ok(RunOutput {
            exit_code: out.status.unwrap_or(137),
            stdout: out.stdout,
            stderr: out.stderr,
            duration: out.duration,
            timed_out: out.timed_out,
        })
    }

    fn install(
        &self,
        base_image: &str,
        package: &str,
        options: &RunOptions,
    ) -> Result<Result<(), String>, RuntimeError> {
        let name = self.container_name();
        let mut args = vec!["run", "--rm", "--name", name.as_str()];
        if !options.network {
            args.extend(["--network", "none"]);
        }
        args.extend([base_image, "pip", "install", package]);
        let out = self.capture(&args, INSTALL_TIMEOUT, Some(&name))?;
        match out.status {
            Some(0) => Ok(Ok(())),
            Some(125) => Err(RuntimeError::Run(last_lines(&out.stderr, 5))),
            _ if out.timed_out => Ok(Err(format!("pip install {package} timed out"))),
            _ => Ok(Err(last_lines(&out.stderr, 2))),
        }
    }

    fn remove_image(&self, image: &ImageRef) {
        let _ = Command::new(&self.binary)
            .args(["rmi", "-f", &image.reference])
            .stdout(Stdio::null())
            .stderr(Stdio::null())
            .status();
    }
}
