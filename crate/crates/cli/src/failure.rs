//! Process exit codes and the error type that carries them.

use snipharness_core::harness::PhaseError;
use snipharness_core::miner::{ApiError, MineFailure, MineFailureKind, ReplayError};
use snipharness_core::report::ReportError;
use snipharness_core::runtime::RuntimeError;
use snipharness_core::StoreError;

/// Unknown id, or the executed snippet did not succeed.
pub const NOT_FOUND: u8 = 1;
pub const IO: u8 = 2;
pub const RUNTIME_UNAVAILABLE: u8 = 3;
pub const NO_SPEC: u8 = 4;
pub const NETWORK: u8 = 5;
pub const PHASE_ORDER: u8 = 6;
pub const USAGE: u8 = 64;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Failure::new(USAGE, message)
    }

    pub fn io(message: impl Into<String>) -> Self {
        Failure::new(IO, message)
    }
}

impl From<StoreError> for Failure {
    fn from(e: StoreError) -> Self {
        let code = match e {
            StoreError::NotFound(_) => NOT_FOUND,
            StoreError::Validation(_) => USAGE,
            StoreError::Io { .. } | StoreError::Corrupt { .. } => IO,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<RuntimeError> for Failure {
    fn from(e: RuntimeError) -> Self {
        let code = match e {
            RuntimeError::Unavailable(_) => RUNTIME_UNAVAILABLE,
            RuntimeError::Io(_) => IO,
            RuntimeError::Build(_) | RuntimeError::Run(_) => NOT_FOUND,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<ApiError> for Failure {
    fn from(e: ApiError) -> Self {
        let code = match e {
            ApiError::NotFound(_) => NOT_FOUND,
            _ => NETWORK,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<ReplayError> for Failure {
    fn from(e: ReplayError) -> Self {
        Failure::io(e.to_string())
    }
}

impl From<MineFailure> for Failure {
    fn from(e: MineFailure) -> Self {
        let code = match &e.kind {
            MineFailureKind::Query(_) | MineFailureKind::Unsupported => USAGE,
            MineFailureKind::Api(_) => NETWORK,
            MineFailureKind::Store(_) => IO,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<PhaseError> for Failure {
    fn from(e: PhaseError) -> Self {
        match e {
            PhaseError::NoGatingData(_) => Failure::new(PHASE_ORDER, e.to_string()),
            PhaseError::NoWorkers => Failure::usage(e.to_string()),
            PhaseError::Store(store) => store.into(),
        }
    }
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Self {
        match e {
            ReportError::MissingFromPhase { .. } => Failure::new(PHASE_ORDER, e.to_string()),
            ReportError::Store(store) => store.into(),
        }
    }
}
