//! Job requests, dispatch and JSON reports for the `symalg` binary.

mod args;
mod commands;
mod jobs;

use std::fmt;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use thiserror::Error;

use symalg::liealg::{validate_jacobi, StructureConstants};
use symalg::rational::Rational;

pub use args::{parse_args, Invocation};

/// Version of the report layout. Bumped whenever a payload changes shape.
pub const SCHEMA_VERSION: u32 = 1;

/// Seed for the randomized rank checks when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 1729;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Jacobi,
    Commutant,
    Closure,
    Casimirs,
    Hamiltonian,
    Spectrum,
    Fock,
    VermaVerify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Jacobi => "jacobi",
            Command::Commutant => "commutant",
            Command::Closure => "closure",
            Command::Casimirs => "casimirs",
            Command::Hamiltonian => "hamiltonian",
            Command::Spectrum => "spectrum",
            Command::Fock => "fock",
            Command::VermaVerify => "verma-verify",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct JobOptions {
    /// 0-based subalgebra indices.
    pub sub: Option<Vec<usize>>,
    pub maxdeg: Option<u32>,
    pub closure_maxdeg: Option<u32>,
    pub casimir_degree: Option<u32>,
    pub gens: Option<PathBuf>,
    pub alpha: Vec<Rational>,
    pub gammas: Vec<Option<Rational>>,
    pub seed: Option<u64>,
    pub skip_jacobi: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct JobRequest {
    pub command: Command,
    pub input: PathBuf,
    pub options: JobOptions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ErrorKind {
    ParseError,
    ValidationError,
    EngineError,
}

impl ErrorKind {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::ParseError => 2,
            ErrorKind::ValidationError => 3,
            ErrorKind::EngineError => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error, Serialize)]
#[error("{kind:?}: {message}")]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
    pub detail: Value,
}

impl CliError {
    pub fn new(kind: ErrorKind, message: impl Into<String>) -> Self {
        CliError {
            kind,
            message: message.into(),
            detail: Value::Null,
        }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        CliError::new(ErrorKind::ParseError, message)
    }

    pub fn validation(message: impl Into<String>) -> Self {
        CliError::new(ErrorKind::ValidationError, message)
    }

    pub fn engine(message: impl Into<String>) -> Self {
        CliError::new(ErrorKind::EngineError, message)
    }

    pub fn with_detail(mut self, detail: Value) -> Self {
        self.detail = detail;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Provenance {
    pub input_sha256: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gens_sha256: Option<String>,
    pub engine_version: String,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JobReport {
    pub schema_version: u32,
    pub command: String,
    pub status: Status,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<CliError>,
    pub provenance: Provenance,
    #[serde(skip)]
    pub summary: String,
}

impl JobReport {
    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }

    pub fn exit_code(&self) -> i32 {
        self.error.as_ref().map_or(0, |e| e.kind.exit_code())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Report for a request that could not be formed at all.
    pub fn rejected(command: Option<&str>, error: CliError) -> Self {
        JobReport {
            schema_version: SCHEMA_VERSION,
            command: command.unwrap_or("unknown").to_string(),
            status: Status::Error,
            payload: Value::Null,
            summary: format!("{}: {}", command.unwrap_or("symalg"), error),
            error: Some(error),
            provenance: Provenance {
                input_sha256: None,
                gens_sha256: None,
                engine_version: symalg::VERSION.to_string(),
                seed: DEFAULT_SEED,
            },
        }
    }
}

pub(crate) struct Outcome {
    pub payload: Value,
    pub summary: String,
}

pub(crate) fn read_input(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|e| CliError::parse(format!("{}: {e}", path.display())))
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub(crate) fn utf8(bytes: &[u8], path: &Path) -> Result<String, CliError> {
    String::from_utf8(bytes.to_vec())
        .map_err(|_| CliError::parse(format!("{}: not valid UTF-8", path.display())))
}

fn parse_algebra(
    text: &str,
    path: &Path,
    skip_jacobi: bool,
) -> Result<StructureConstants, CliError> {
    let c = StructureConstants::from_json(text)
        .map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
    if !skip_jacobi {
        let report = validate_jacobi(&c);
        if !report.passed() {
            return Err(
                CliError::validation("structure constants fail the Jacobi identity")
                    .with_detail(commands::jacobi_violations_json(&report)),
            );
        }
    }
    Ok(c)
}

/// Reads and validates an algebra file. Antisymmetry is enforced while
/// loading; the Jacobi identity is checked unless `skip_jacobi` is set.
pub fn load_algebra(path: &Path, skip_jacobi: bool) -> Result<StructureConstants, CliError> {
    let bytes = read_input(path)?;
    parse_algebra(&utf8(&bytes, path)?, path, skip_jacobi)
}

/// Runs one job. Failures are folded into the report, never panics on bad
/// input.
pub fn run(job: &JobRequest) -> JobReport {
    let seed = job.options.seed.unwrap_or(DEFAULT_SEED);
    let mut provenance = Provenance {
        input_sha256: None,
        gens_sha256: None,
        engine_version: symalg::VERSION.to_string(),
        seed,
    };
    let result = read_input(&job.input).and_then(|bytes| {
        provenance.input_sha256 = Some(sha256_hex(&bytes));
        let gens = match &job.options.gens {
            Some(p) => {
                let g = read_input(p)?;
                provenance.gens_sha256 = Some(sha256_hex(&g));
                Some(utf8(&g, p)?)
            }
            None => None,
        };
        let text = utf8(&bytes, &job.input)?;
        dispatch(job, &text, gens.as_deref(), seed)
    });
    match result {
        Ok(Outcome { payload, summary }) => JobReport {
            schema_version: SCHEMA_VERSION,
            command: job.command.name().to_string(),
            status: Status::Ok,
            payload,
            error: None,
            provenance,
            summary: format!("{}: ok, {summary}", job.command),
        },
        Err(error) => JobReport {
            schema_version: SCHEMA_VERSION,
            command: job.command.name().to_string(),
            status: Status::Error,
            payload: Value::Null,
            summary: format!("{}: {error}", job.command),
            error: Some(error),
            provenance,
        },
    }
}

fn dispatch(
    job: &JobRequest,
    text: &str,
    gens: Option<&str>,
    seed: u64,
) -> Result<Outcome, CliError> {
    let o = &job.options;
    let algebra = || parse_algebra(text, &job.input, o.skip_jacobi);
    let need_gens = || gens.ok_or_else(|| CliError::parse(format!("{} needs --gens", job.command)));
    match job.command {
        Command::Jacobi => commands::jacobi(&parse_algebra(text, &job.input, true)?),
        Command::Commutant => commands::commutant(&algebra()?, o),
        Command::Closure => commands::closure(&algebra()?, need_gens()?, o),
        Command::Casimirs => commands::casimirs(&algebra()?, need_gens()?, o, seed),
        Command::Hamiltonian => commands::hamiltonian(&algebra()?, gens, o),
        Command::Spectrum => commands::spectrum(jobs::parse(text, &job.input)?),
        Command::Fock => commands::fock(jobs::parse(text, &job.input)?),
        Command::VermaVerify => commands::verma(jobs::parse(text, &job.input)?),
    }
}
