//! Subcommand bodies. Each returns the exit code and the text for stdout and
//! stderr so tests can drive them without a process.

use std::path::Path;
use std::time::Instant;

use frobenius_core::{classify, odd_dimension_shortcut, verify_isomorphism, FrobeniusError, Outcome64, Tolerance64};

use crate::document::{AxiomDoc, ReportDocument, TensorDocument, Timing, ToleranceDoc};
use crate::fixtures::{self, Kind};

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, Clone)]
pub struct Options {
    pub tol: Tolerance64,
    pub json: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutput {
    fn input_error(message: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }

    fn report(code: i32, mut report: ReportDocument, started: Instant, opts: &Options) -> Self {
        report.timing = Timing {
            elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
        };
        Self {
            code,
            stdout: if opts.json { report.to_json() } else { report.to_human() },
            stderr: String::new(),
        }
    }
}

fn load(path: &Path) -> Result<frobenius_core::Tensor64, CommandOutput> {
    TensorDocument::read(path)
        .and_then(|d| d.to_tensor())
        .map_err(CommandOutput::input_error)
}

fn outcome_code(o: &Outcome64) -> i32 {
    if o.is_success() {
        EXIT_SUCCESS
    } else {
        EXIT_FAILURE
    }
}

pub fn classify_file(path: &Path, opts: &Options) -> CommandOutput {
    let started = Instant::now();
    let t = match load(path) {
        Ok(t) => t,
        Err(e) => return e,
    };
    let outcome = classify(&t, &opts.tol);
    let mut report = ReportDocument::new("classify", &outcome, &opts.tol);
    report.verify_residual = verify_isomorphism(&t, &outcome, &opts.tol).ok();
    report.axioms = Some(AxiomDoc::from(&t.check_axioms(&opts.tol)));
    CommandOutput::report(outcome_code(&outcome), report, started, opts)
}

pub fn verify_file(path: &Path, opts: &Options) -> CommandOutput {
    let started = Instant::now();
    let t = match load(path) {
        Ok(t) => t,
        Err(e) => return e,
    };
    let axioms = t.check_axioms(&opts.tol);
    let pass = axioms.has_unity && axioms.associative;
    let outcome = match (axioms.has_unity, axioms.witness_triple) {
        (_, Some(_)) => "NonAssociative",
        (false, None) => "NoUnity",
        (true, None) => "Pass",
    };
    let report = ReportDocument {
        command: "verify".into(),
        outcome: outcome.into(),
        label: None,
        iso: None,
        homomorphism_residual: None,
        verify_residual: None,
        witness: None,
        axioms: Some(AxiomDoc::from(&axioms)),
        tolerance: ToleranceDoc::from(&opts.tol),
        timing: Timing { elapsed_ms: 0.0 },
    };
    CommandOutput::report(if pass { EXIT_SUCCESS } else { EXIT_FAILURE }, report, started, opts)
}

pub fn shortcut_file(path: &Path, opts: &Options) -> CommandOutput {
    let started = Instant::now();
    let t = match load(path) {
        Ok(t) => t,
        Err(e) => return e,
    };
    match odd_dimension_shortcut(&t, &opts.tol) {
        Ok(outcome) => {
            let mut report = ReportDocument::new("shortcut", &outcome, &opts.tol);
            report.verify_residual = verify_isomorphism(&t, &outcome, &opts.tol).ok();
            CommandOutput::report(outcome_code(&outcome), report, started, opts)
        }
        Err(e @ FrobeniusError::EvenDimension(_)) => CommandOutput {
            code: EXIT_PRECONDITION,
            stdout: String::new(),
            stderr: format!("error: {e}; the shortcut needs an odd-dimensional algebra\n"),
        },
        Err(e) => CommandOutput::input_error(e),
    }
}

/// Writes the document to `out`, or to stdout when `out` is `None`.
pub fn generate(kind: Kind, seed: u64, n: usize, out: Option<&Path>) -> CommandOutput {
    if kind == Kind::RnComponentwise && !(1..=frobenius_core::linalg::DEFAULT_MAX_DIM).contains(&n) {
        return CommandOutput::input_error(format!(
            "--n must lie in 1..={}, got {n}",
            frobenius_core::linalg::DEFAULT_MAX_DIM
        ));
    }
    let json = fixtures::generate(kind, seed, n).to_json();
    match out {
        Some(path) => match std::fs::write(path, &json) {
            Ok(()) => CommandOutput {
                code: EXIT_SUCCESS,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => CommandOutput::input_error(format!("cannot write {}: {e}", path.display())),
        },
        None => CommandOutput {
            code: EXIT_SUCCESS,
            stdout: json,
            stderr: String::new(),
        },
    }
}
