//! Execution outcome records shared by the harness, the store and the reports.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::infer::InstallReport;

/// Evaluation phase a result belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Phase {
    #[serde(rename = "baseline-v2")]
    BaselineV2,
    #[serde(rename = "baseline-v3")]
    BaselineV3,
    #[serde(rename = "post-inference-v2")]
    PostInferenceV2,
    #[serde(rename = "post-inference-v3")]
    PostInferenceV3,
}

pub const PYTHON2_IMAGE: &str = "python:2.7.13";
pub const PYTHON3_IMAGE: &str = "python:3.6.5";

impl Phase {
    pub const ALL: [Phase; 4] = [
        Phase::BaselineV2,
        Phase::BaselineV3,
        Phase::PostInferenceV2,
        Phase::PostInferenceV3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Phase::BaselineV2 => "baseline-v2",
            Phase::BaselineV3 => "baseline-v3",
            Phase::PostInferenceV2 => "post-inference-v2",
            Phase::PostInferenceV3 => "post-inference-v3",
        }
    }

    pub fn is_post_inference(self) -> bool {
        matches!(self, Phase::PostInferenceV2 | Phase::PostInferenceV3)
    }

    /// Pinned interpreter image for the phase.
    pub fn default_image(self) -> &'static str {
        match self {
            Phase::BaselineV2 | Phase::PostInferenceV2 => PYTHON2_IMAGE,
            Phase::BaselineV3 | Phase::PostInferenceV3 => PYTHON3_IMAGE,
        }
    }

    /// Phase whose results decide eligibility for this one. Inference passes
    /// in both interpreters are gated on the Python 2 baseline.
    pub fn gating_phase(self) -> Option<Phase> {
        self.is_post_inference().then_some(Phase::BaselineV2)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Phase {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Phase::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown phase `{s}` (expected one of baseline-v2, baseline-v3, post-inference-v2, post-inference-v3)"))
    }
}

/// Outcome class of one run: the three fixed classes or the name of the
/// exception that terminated the snippet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OutcomeClass {
    Success,
    Timeout,
    Infra,
    Exception(String),
}

/// `ImportError` and its Python 3 subclass.
pub const IMPORT_ERROR_FAMILY: [&str; 2] = ["ImportError", "ModuleNotFoundError"];

impl OutcomeClass {
    pub fn exception(name: impl Into<String>) -> Self {
        OutcomeClass::Exception(name.into())
    }

    pub fn as_str(&self) -> &str {
        match self {
            OutcomeClass::Success => "Success",
            OutcomeClass::Timeout => "Timeout",
            OutcomeClass::Infra => "Infra",
            OutcomeClass::Exception(name) => name,
        }
    }

    pub fn is_import_error_family(&self) -> bool {
        is_import_error_family(self.as_str())
    }
}

pub fn is_import_error_family(class: &str) -> bool {
    IMPORT_ERROR_FAMILY.contains(&class)
}

impl From<&str> for OutcomeClass {
    fn from(s: &str) -> Self {
        match s {
            "Success" => OutcomeClass::Success,
            "Timeout" => OutcomeClass::Timeout,
            "Infra" => OutcomeClass::Infra,
            other => OutcomeClass::Exception(other.to_string()),
        }
    }
}

impl fmt::Display for OutcomeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for OutcomeClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for OutcomeClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Ok(OutcomeClass::from(s.as_str()))
    }
}

/// Captured streams are truncated to their last 4 KiB.
pub const TAIL_BYTES: usize = 4096;

/// Classified result of one containerized run; one line of `results.jsonl`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExecutionOutcome {
    #[serde(rename = "id")]
    pub snippet_id: String,
    pub phase: Phase,
    pub outcome_class: OutcomeClass,
    pub exception_name: Option<String>,
    pub exception_message: String,
    pub exit_code: i32,
    pub duration_ms: u64,
    pub stdout_tail: String,
    pub stderr_tail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub install_report: Option<InstallReport>,
}

/// Last `TAIL_BYTES` of `text`, cut on a character boundary.
pub fn tail(text: &str) -> String {
    if text.len() <= TAIL_BYTES {
        return text.to_string();
    }
    let mut start = text.len() - TAIL_BYTES;
    while !text.is_char_boundary(start) {
        start += 1;
    }
    text[start..].to_string()
}
