//! Command-line front end. The binary only parses arguments and prints;
//! everything else lives here so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 a relation or verification failed, 2 bad input,
//! 3 resource or window limits.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::algebra::{self, AlgebraError, AlgebraSpec, GradedLieAlgebra};
use crate::cochain::{self, CochainError, Theory};
use crate::cohomology::{self, CohomologyError, EngineOptions};
use crate::cup::{self, CupError};
use crate::witt::{self, WindowDecision, WittCocycle, WittError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Environment variable read for the default worker count.
pub const WORKERS_ENV: &str = "LEIBNIZ_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    /// JSON with every exact value as a string.
    Structured,
}

#[derive(Parser, Debug)]
#[command(
    name = "leibniz",
    version,
    about = "Exact Leibniz and Lie cohomology of graded Lie algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table, global = true)]
    pub format: OutputFormat,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads (defaults to the available parallelism).
    #[arg(long, env = WORKERS_ENV, global = true)]
    pub workers: Option<usize>,
}

#[derive(Subcommand, Debug, Clone, PartialEq)]
pub enum Command {
    /// Cohomology dimensions with representatives.
    Dims {
        /// Builtin name or path to a TOML algebra spec.
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = "leibniz")]
        theory: Theory,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value_t = 8)]
        window: i64,
    },
    /// Cocycle check and non-triviality certificate for a Witt cocycle.
    Verify {
        /// theta, theta-tilde, alpha, omega or beta1.
        #[arg(long)]
        cocycle: String,
        #[arg(long)]
        window: i64,
    },
    /// Cup-product relations on w1.
    Relations {
        #[arg(long, default_value = "w1")]
        algebra: String,
    },
    /// Diagonal Leibniz cohomology of Vect S¹ with generator labels.
    DiagonalS1 {
        #[arg(long)]
        max_degree: usize,
        /// W₁ degrees recomputed by the engine; later ones use the closed form.
        #[arg(long, default_value_t = 6)]
        compute_through: usize,
    },
    /// Lie against Leibniz dimensions in low degrees.
    Pirashvili {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Antisymmetry, Jacobi and Euler checks on a window of weights.
    Validate {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value_t = 6)]
        window: i64,
    },
    /// Dump one slice matrix of the differential.
    ExportSlice {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = "leibniz")]
        theory: Theory,
        #[arg(long)]
        degree: usize,
        /// Euler eigenvalue of the slice.
        #[arg(long, default_value_t = 0)]
        weight: i64,
        #[arg(long, default_value_t = 8)]
        window: i64,
    },
}

/// Everything a run needs.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub format: OutputFormat,
    pub output: Option<PathBuf>,
    pub workers: usize,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, RunError> {
        let workers = match cli.workers {
            Some(0) => return Err(RunError::Input("worker count must be at least 1".into())),
            Some(n) => n,
            None => std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1),
        };
        Ok(RunConfig {
            command: cli.command,
            format: cli.format,
            output: cli.output,
            workers,
        })
    }

    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            format: OutputFormat::Table,
            output: None,
            workers: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RunError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Resource(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Input(_) => EXIT_INPUT,
            RunError::Resource(_) => EXIT_RESOURCE,
        }
    }
}

impl From<AlgebraError> for RunError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::WindowTooSmall(_) | AlgebraError::Escaped { .. } => {
                RunError::Resource(e.to_string())
            }
            _ => RunError::Input(e.to_string()),
        }
    }
}

impl From<CochainError> for RunError {
    fn from(e: CochainError) -> Self {
        match e {
            CochainError::Algebra(a) => a.into(),
            CochainError::InfiniteSlice { .. } => RunError::Resource(e.to_string()),
            _ => RunError::Input(e.to_string()),
        }
    }
}

impl From<CohomologyError> for RunError {
    fn from(e: CohomologyError) -> Self {
        match e {
            CohomologyError::Cochain(c) => c.into(),
            CohomologyError::TooLarge { .. } => RunError::Resource(e.to_string()),
            _ => RunError::Input(e.to_string()),
        }
    }
}

impl From<CupError> for RunError {
    fn from(e: CupError) -> Self {
        match e {
            CupError::Cohomology(c) => c.into(),
            CupError::TooLarge { .. } => RunError::Resource(e.to_string()),
            _ => RunError::Input(e.to_string()),
        }
    }
}

impl From<WittError> for RunError {
    fn from(e: WittError) -> Self {
        match e {
            WittError::WindowTooSmall { .. } => RunError::Resource(e.to_string()),
            WittError::Algebra(a) => a.into(),
            WittError::Cochain(c) => c.into(),
            _ => RunError::Input(e.to_string()),
        }
    }
}

/// Report text and exit code of a completed run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
}

/// Builtin name, or path to a TOML spec when the argument names a file.
pub fn resolve_algebra(arg: &str, window: i64) -> Result<GradedLieAlgebra, RunError> {
    let path = Path::new(arg);
    if arg.ends_with(".toml") || path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| RunError::Input(format!("cannot read {arg}: {e}")))?;
        return Ok(AlgebraSpec::parse_toml(&text)?.build(window)?);
    }
    Ok(algebra::builtin(arg, window)?)
}

/// Runs the command on a pool with `config.workers` threads.
pub fn run(config: &RunConfig) -> Result<Outcome, RunError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers.max(1))
        .build()
        .map_err(|e| RunError::Resource(e.to_string()))?;
    pool.install(|| match &config.command {
        Command::Dims { .. } => cmd_dims(config),
        Command::Verify { .. } => cmd_verify(config),
        Command::Relations { .. } => cmd_relations(config),
        Command::DiagonalS1 { .. } => cmd_diagonal(config),
        Command::Pirashvili { .. } => cmd_pirashvili(config),
        Command::Validate { .. } => cmd_validate(config),
        Command::ExportSlice { .. } => cmd_export_slice(config),
    })
}

fn structured(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn outcome(code: i32, report: String) -> Result<Outcome, RunError> {
    Ok(Outcome { code, report })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn cmd_dims(config: &RunConfig) -> Result<Outcome, RunError> {
    let Command::Dims {
        algebra,
        theory,
        max_degree,
        window,
    } = &config.command
    else {
        unreachable!("cmd_dims on another command")
    };
    let alg = resolve_algebra(algebra, *window)?;
    let report =
        cohomology::cohomology_with(&alg, *theory, *max_degree, &EngineOptions::default())?;
    let code = if report.d_squared_verified {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    if config.format == OutputFormat::Structured {
        return outcome(code, structured(&report));
    }
    let mut s = String::new();
    let reduction = match report.reduction {
        cohomology::Reduction::ZeroWeight => "zero-weight",
        cohomology::Reduction::AllWeights => "all weights",
    };
    writeln!(
        s,
        "algebra {}  theory {}  reduction {reduction}",
        report.algebra, report.theory
    )
    .unwrap();
    writeln!(
        s,
        "{:>3} {:>9} {:>8} {:>8} {:>4}  representatives",
        "n", "cochains", "rank_in", "rank_out", "dim"
    )
    .unwrap();
    for d in &report.degrees {
        let reps = if !d.representatives_computed {
            "(over budget)".to_string()
        } else {
            d.representatives
                .iter()
                .map(|c| format!("{} terms", c.len()))
                .collect::<Vec<_>>()
                .join(", ")
        };
        writeln!(
            s,
            "{:>3} {:>9} {:>8} {:>8} {:>4}  {reps}",
            d.degree, d.cochains, d.rank_in, d.rank_out, d.dim
        )
        .unwrap();
    }
    let dims: Vec<String> = report.dims().iter().map(usize::to_string).collect();
    writeln!(s, "dims {}", dims.join(",")).unwrap();
    writeln!(s, "d^2 = 0 verified: {}", yes(report.d_squared_verified)).unwrap();
    outcome(code, s)
}

pub fn cmd_verify(config: &RunConfig) -> Result<Outcome, RunError> {
    let Command::Verify { cocycle, window } = &config.command else {
        unreachable!("cmd_verify on another command")
    };
    let f = WittCocycle::by_name(cocycle)?;
    let check = witt::verify_cocycle(&f, *window)?;
    let decision = witt::certify_nontrivial(&f, *window)?;
    let nontrivial = decision.is_nontrivial();
    let code = if check.passed() && nontrivial {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    let certificate = match &decision {
        WindowDecision::NotExact { certificate } => json!({
            "kind": "not-exact",
            "chain": certificate.iter().map(|(t, v)| json!([t, v.to_string()])).collect::<Vec<_>>(),
        }),
        WindowDecision::PrimitiveCandidate { primitive } => {
            json!({ "kind": "primitive", "primitive": primitive })
        }
    };
    if config.format == OutputFormat::Structured {
        return outcome(
            code,
            structured(
                &json!({ "cocycle": cocycle, "check": check, "nontrivial": nontrivial, "certificate": certificate }),
            ),
        );
    }
    let mut s = String::new();
    writeln!(
        s,
        "cocycle {cocycle} (degree {}) on |k| <= {}, guard band {}",
        check.degree, check.window, check.guard_band
    )
    .unwrap();
    writeln!(
        s,
        "tuples checked {}  violations {}",
        check.tuples_checked,
        check.violations.len()
    )
    .unwrap();
    for (t, v) in check.violations.iter().take(10) {
        writeln!(s, "  d f{t:?} = {v}").unwrap();
    }
    writeln!(
        s,
        "cocycle: {}",
        if check.passed() { "pass" } else { "FAIL" }
    )
    .unwrap();
    match &decision {
        WindowDecision::NotExact { certificate } => writeln!(
            s,
            "nontrivial: yes (certificate on {} tuples)",
            certificate.len()
        )
        .unwrap(),
        WindowDecision::PrimitiveCandidate { primitive } => writeln!(
            s,
            "nontrivial: no (primitive with {} terms on the window)",
            primitive.len()
        )
        .unwrap(),
    }
    outcome(code, s)
}

pub fn cmd_relations(config: &RunConfig) -> Result<Outcome, RunError> {
    let Command::Relations { algebra } = &config.command else {
        unreachable!("cmd_relations on another command")
    };
    let alg = resolve_algebra(algebra, 1)?;
    let checks = cup::w1_relations(&alg)?;
    let code = if checks.iter().all(|c| c.passed) {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    if config.format == OutputFormat::Structured {
        return outcome(code, structured(&checks));
    }
    let mut s = String::new();
    for c in &checks {
        writeln!(
            s,
            "{} {}  ({})",
            if c.passed { "pass" } else { "FAIL" },
            c.relation,
            c.detail
        )
        .unwrap();
    }
    outcome(code, s)
}

/// W₁ table through `top`: engine values through `computed`, closed form
/// after. Returns the table, its provenance and any disagreement.
pub fn w1_table(
    top: usize,
    computed: usize,
) -> Result<(Vec<usize>, Vec<&'static str>, Vec<usize>), RunError> {
    let w1 = algebra::builtin("w1", 1)?;
    let through = computed.min(top);
    let opts = EngineOptions {
        representative_budget: 0,
        verify_d_squared: false,
        ..Default::default()
    };
    let engine = cohomology::cohomology_with(&w1, Theory::Leibniz, through, &opts)?.dims();
    let mut table = Vec::with_capacity(top + 1);
    let mut source = Vec::with_capacity(top + 1);
    let mut disagreements = Vec::new();
    for q in 0..=top {
        if q <= through {
            if engine[q] != cohomology::w1_closed_form_dim(q) {
                disagreements.push(q);
            }
            table.push(engine[q]);
            source.push("computed");
        } else {
            table.push(cohomology::w1_closed_form_dim(q));
            source.push("closed-form");
        }
    }
    Ok((table, source, disagreements))
}

pub fn cmd_diagonal(config: &RunConfig) -> Result<Outcome, RunError> {
    let Command::DiagonalS1 {
        max_degree,
        compute_through,
    } = &config.command
    else {
        unreachable!("cmd_diagonal on another command")
    };
    let (table, source, disagreements) = w1_table(max_degree + 1, *compute_through)?;
    let assembly = cohomology::diagonal_s1_dims(&table, *max_degree)?;
    let code = if disagreements.is_empty() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    if config.format == OutputFormat::Structured {
        return outcome(
            code,
            structured(
                &json!({ "assembly": assembly, "w1_source": source, "disagreements": disagreements }),
            ),
        );
    }
    let mut s = String::new();
    let w1: Vec<String> = table
        .iter()
        .zip(&source)
        .map(|(d, src)| format!("{d}{}", if *src == "computed" { "" } else { "*" }))
        .collect();
    writeln!(
        s,
        "HL^q(W1), q = 0..{}: {}   (* closed form)",
        max_degree + 1,
        w1.join(",")
    )
    .unwrap();
    writeln!(s, "m = 0: ground field, dimension {}", assembly.degree_zero).unwrap();
    for d in &assembly.degrees {
        let labels: Vec<&str> = d.generators.iter().map(|g| g.name.as_str()).collect();
        writeln!(
            s,
            "m = {:>2}: dim {}  {}",
            d.degree,
            d.dim,
            labels.join(", ")
        )
        .unwrap();
    }
    for q in &disagreements {
        writeln!(
            s,
            "MISMATCH: computed HL^{q}(W1) differs from the closed form"
        )
        .unwrap();
    }
    outcome(code, s)
}

pub fn cmd_pirashvili(config: &RunConfig) -> Result<Outcome, RunError> {
    let Command::Pirashvili {
        algebra,
        max_degree,
    } = &config.command
    else {
        unreachable!("cmd_pirashvili on another command")
    };
    let alg = resolve_algebra(algebra, 8)?;
    let report = cohomology::pirashvili_report(&alg, *max_degree)?;
    let code = if report.low_degrees_agree && report.h2_injects {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    if config.format == OutputFormat::Structured {
        return outcome(code, structured(&report));
    }
    let mut s = String::new();
    writeln!(s, "algebra {}", report.algebra).unwrap();
    writeln!(s, "{:>3} {:>4} {:>4}", "n", "H", "HL").unwrap();
    for r in &report.rows {
        writeln!(s, "{:>3} {:>4} {:>4}", r.degree, r.lie, r.leibniz).unwrap();
    }
    writeln!(
        s,
        "H^0 = HL^0 and H^1 = HL^1: {}",
        yes(report.low_degrees_agree)
    )
    .unwrap();
    writeln!(s, "dim H^2 <= dim HL^2: {}", yes(report.h2_injects)).unwrap();
    outcome(code, s)
}

pub fn cmd_validate(config: &RunConfig) -> Result<Outcome, RunError> {
    let Command::Validate { algebra, window } = &config.command else {
        unreachable!("cmd_validate on another command")
    };
    let alg = resolve_algebra(algebra, *window)?;
    let report = algebra::validate(&alg, *window);
    let code = if report.is_valid() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    if config.format == OutputFormat::Structured {
        return outcome(
            code,
            structured(&json!({ "algebra": alg.name(), "window": window, "report": report })),
        );
    }
    let mut s = String::new();
    writeln!(s, "{alg}").unwrap();
    writeln!(s, "antisymmetry violations {}", report.antisymmetry.len()).unwrap();
    writeln!(s, "jacobi violations {}", report.jacobi.len()).unwrap();
    writeln!(s, "euler violations {}", report.euler.len()).unwrap();
    writeln!(s, "closure violations {}", report.closure.len()).unwrap();
    writeln!(s, "valid: {}", yes(report.is_valid())).unwrap();
    outcome(code, s)
}

pub fn cmd_export_slice(config: &RunConfig) -> Result<Outcome, RunError> {
    let Command::ExportSlice {
        algebra,
        theory,
        degree,
        weight,
        window,
    } = &config.command
    else {
        unreachable!("cmd_export_slice on another command")
    };
    let alg = resolve_algebra(algebra, *window)?;
    let slice = cochain::build_slice(&alg, *degree, *weight, *theory)?;
    if config.format == OutputFormat::Structured {
        let entries: Vec<_> = slice
            .matrix
            .triplets()
            .map(|(r, c, v)| json!([r, c, v.to_string()]))
            .collect();
        return outcome(
            EXIT_OK,
            structured(&json!({
                "algebra": alg.name(),
                "theory": slice.theory,
                "degree": slice.degree,
                "weight": slice.weight,
                "basis": slice.basis,
                "target_basis": slice.target_basis,
                "entries": entries,
            })),
        );
    }
    outcome(EXIT_OK, cochain::export_slice(&slice))
}
