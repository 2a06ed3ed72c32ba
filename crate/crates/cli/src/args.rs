use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use symalg::rational::{parse_rational, Rational};

use crate::{CliError, Command, JobOptions, JobReport, JobRequest};

#[derive(Debug, Parser)]
#[command(
    name = "symalg",
    version,
    about = "Commutants, closure relations, Casimirs and finite-dimensional representations of polynomial symmetry algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Seed for randomized rank checks
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Load the algebra without checking the Jacobi identity
    #[arg(long, global = true)]
    skip_jacobi: bool,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Check the Jacobi identity of an algebra file
    Jacobi { algebra: PathBuf },
    /// Polynomials in the symmetric algebra commuting with a subalgebra
    Commutant {
        algebra: PathBuf,
        /// Comma-separated 1-based basis indices spanning the subalgebra
        #[arg(long, default_value = "1")]
        sub: String,
        #[arg(long, default_value_t = 2)]
        maxdeg: u32,
    },
    /// Bracket table of a generator set, written in the generators
    Closure {
        algebra: PathBuf,
        #[arg(long)]
        gens: PathBuf,
        #[arg(long, default_value_t = 3)]
        maxdeg: u32,
    },
    /// Casimirs of the algebra generated by a generator set
    Casimirs {
        algebra: PathBuf,
        #[arg(long)]
        gens: PathBuf,
        /// Generator-degree bound of the Casimir search
        #[arg(long, default_value_t = 3)]
        maxdeg: u32,
        /// Generator-degree bound of the closure relations
        #[arg(long, default_value_t = 3)]
        closure_maxdeg: u32,
    },
    /// Linear subalgebra terms plus full-algebra Casimirs, checked against the commutant
    Hamiltonian(HamiltonianArgs),
    /// Darboux-II energy families from a job file
    Spectrum { job: PathBuf },
    /// Fock representation or oscillator realisation from a job file
    Fock { job: PathBuf },
    /// Truncated cubic-algebra module from a job file
    VermaVerify { job: PathBuf },
}

#[derive(Debug, Args)]
struct HamiltonianArgs {
    algebra: PathBuf,
    #[arg(long, default_value = "1")]
    sub: String,
    /// Comma-separated coefficients of the subalgebra basis elements
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    gamma1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    gamma2: Option<String>,
    /// Comma-separated Casimir coefficients, overriding --gamma1/--gamma2
    #[arg(long, allow_hyphen_values = true)]
    gammas: Option<String>,
    /// Generators to check against; the commutant up to --maxdeg otherwise
    #[arg(long)]
    gens: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    maxdeg: u32,
    /// Degree bound for the full-algebra Casimirs
    #[arg(long, default_value_t = 2)]
    casimir_degree: u32,
}

/// What the binary should do with its command line.
#[derive(Debug)]
pub enum Invocation {
    Run(JobRequest),
    /// Help or version text, printed as is.
    Print(String),
    Reject(Box<JobReport>),
}

fn rationals(list: &str, flag: &str) -> Result<Vec<Rational>, CliError> {
    list.split(',')
        .map(|s| parse_rational(s).map_err(|e| CliError::parse(format!("--{flag}: {e}"))))
        .collect()
}

fn one_rational(s: &Option<String>, flag: &str) -> Result<Option<Rational>, CliError> {
    s.as_deref()
        .map(|v| parse_rational(v).map_err(|e| CliError::parse(format!("--{flag}: {e}"))))
        .transpose()
}

fn sub_indices(list: &str) -> Result<Vec<usize>, CliError> {
    list.split(',')
        .map(|s| match s.trim().parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i - 1),
            _ => Err(CliError::parse(format!(
                "--sub: {s:?} is not a 1-based index"
            ))),
        })
        .collect()
}

fn build(cli: Cli) -> Result<JobRequest, CliError> {
    let mut options = JobOptions {
        seed: cli.seed,
        skip_jacobi: cli.skip_jacobi,
        ..JobOptions::default()
    };
    let (command, input) = match cli.command {
        Cmd::Jacobi { algebra } => (Command::Jacobi, algebra),
        Cmd::Commutant {
            algebra,
            sub,
            maxdeg,
        } => {
            options.sub = Some(sub_indices(&sub)?);
            options.maxdeg = Some(maxdeg);
            (Command::Commutant, algebra)
        }
        Cmd::Closure {
            algebra,
            gens,
            maxdeg,
        } => {
            options.gens = Some(gens);
            options.maxdeg = Some(maxdeg);
            (Command::Closure, algebra)
        }
        Cmd::Casimirs {
            algebra,
            gens,
            maxdeg,
            closure_maxdeg,
        } => {
            options.gens = Some(gens);
            options.maxdeg = Some(maxdeg);
            options.closure_maxdeg = Some(closure_maxdeg);
            (Command::Casimirs, algebra)
        }
        Cmd::Hamiltonian(h) => {
            options.sub = Some(sub_indices(&h.sub)?);
            options.alpha = match &h.alpha {
                Some(list) => rationals(list, "alpha")?,
                None => Vec::new(),
            };
            options.gammas = match &h.gammas {
                Some(list) => rationals(list, "gammas")?.into_iter().map(Some).collect(),
                None => vec![
                    one_rational(&h.gamma1, "gamma1")?,
                    one_rational(&h.gamma2, "gamma2")?,
                ],
            };
            options.gens = h.gens;
            options.maxdeg = Some(h.maxdeg);
            options.casimir_degree = Some(h.casimir_degree);
            (Command::Hamiltonian, h.algebra)
        }
        Cmd::Spectrum { job } => (Command::Spectrum, job),
        Cmd::Fock { job } => (Command::Fock, job),
        Cmd::VermaVerify { job } => (Command::VermaVerify, job),
    };
    Ok(JobRequest {
        command,
        input,
        options,
    })
}

fn command_word(args: &[OsString]) -> Option<String> {
    args.iter()
        .skip(1)
        .filter_map(|s| s.to_str())
        .find(|s| !s.starts_with('-'))
        .map(str::to_string)
}

/// Parses a full command line (including the program name).
pub fn parse_args<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    match Cli::try_parse_from(&args) {
        Ok(cli) => {
            let word = command_word(&args);
            match build(cli) {
                Ok(job) => Invocation::Run(job),
                Err(e) => Invocation::Reject(Box::new(JobReport::rejected(word.as_deref(), e))),
            }
        }
        Err(e) => {
            use clap::error::ErrorKind as K;
            match e.kind() {
                K::DisplayHelp | K::DisplayVersion => Invocation::Print(e.to_string()),
                _ => {
                    let word = command_word(&args);
                    let known = word.as_deref().filter(|w| {
                        Cli::try_parse_from(["symalg", w, "--help"])
                            .is_err_and(|e| e.kind() == K::DisplayHelp)
                    });
                    let rendered = e.render().to_string();
                    let message = if e.kind() == K::DisplayHelpOnMissingArgumentOrSubcommand {
                        "missing subcommand"
                    } else {
                        rendered
                            .lines()
                            .next()
                            .unwrap_or("invalid arguments")
                            .trim_start_matches("error: ")
                    };
                    Invocation::Reject(Box::new(JobReport::rejected(
                        known,
                        CliError::parse(message.to_string()),
                    )))
                }
            }
        }
    }
}
