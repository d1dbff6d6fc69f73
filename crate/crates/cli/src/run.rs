//! Command orchestration and the exit-code policy.

use crate::ledger::{ledger_entry, MisprintEntry, LEDGER_LEN};
use crate::selftest::{run_selftest, CheckOutcome, Kernels};
use rayon::prelude::*;
use xilab::bounds::{bounds_row, closing_claims, log_grid, recompute_constants, BoundsRow, ClosingClaims, RecomputedConstants, RowError};
use xilab::identities::{verify, CaseSpec, IdentityCase};
use xilab::{Error, ToleranceProfile};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NON_CONVERGENCE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Selftest,
    Verify(Vec<CaseSpec>),
    Bounds(Grid),
    /// Self-test, every default case and the default bounds scan.
    Report,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Selftest => "selftest",
            Command::Verify(_) => "verify",
            Command::Bounds(_) => "bounds",
            Command::Report => "report",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsSection {
    pub grid: Grid,
    pub constants: Result<RecomputedConstants, Error>,
    pub rows: Vec<BoundsRow>,
    pub failures: Vec<RowError>,
    pub claims: Option<ClosingClaims>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub command: &'static str,
    pub profile: ToleranceProfile,
    pub selftest: Vec<CheckOutcome>,
    pub cases: Vec<IdentityCase>,
    pub bounds: Option<BoundsSection>,
    pub misprints: Vec<MisprintEntry>,
    pub exit_code: i32,
    /// One line per gating failure, in report order.
    pub failures: Vec<String>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.exit_code == EXIT_PASS
    }
}

/// Runs `command` with `jobs` worker threads. The report does not depend on
/// `jobs`: work items are independent and collected in input order.
pub fn run(command: &Command, profile: &ToleranceProfile, jobs: usize, kernels: &dyn Kernels) -> RunReport {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| run_in_pool(command, profile, kernels))
}

fn run_in_pool(command: &Command, profile: &ToleranceProfile, kernels: &dyn Kernels) -> RunReport {
    let default_grid = {
        let (min, max, points) = xilab::bounds::DEFAULT_GRID;
        Grid { min, max, points }
    };
    let (selftest, specs, grid) = match command {
        Command::Selftest => (true, Vec::new(), None),
        Command::Verify(specs) => (false, specs.clone(), None),
        Command::Bounds(grid) => (false, Vec::new(), Some(*grid)),
        Command::Report => (
            true,
            xilab::identities::all_default_cases(Default::default()),
            Some(default_grid),
        ),
    };
    let selftest = if selftest { run_selftest(kernels, profile) } else { Vec::new() };
    let cases: Vec<IdentityCase> = specs.par_iter().map(|s| verify(*s, profile)).collect();
    let bounds = grid.map(|g| scan(g, profile));
    let misprints: Vec<MisprintEntry> = (0..LEDGER_LEN).into_par_iter().map(|i| ledger_entry(i, profile)).collect();
    let mut report = RunReport {
        command: command.name(),
        profile: *profile,
        selftest,
        cases,
        bounds,
        misprints,
        exit_code: EXIT_PASS,
        failures: Vec::new(),
    };
    let (code, failures) = judge(&report);
    report.exit_code = code;
    report.failures = failures;
    report
}

fn scan(grid: Grid, profile: &ToleranceProfile) -> BoundsSection {
    let ys = match log_grid(grid.min, grid.max, grid.points) {
        Ok(ys) => ys,
        Err(e) => {
            return BoundsSection {
                grid,
                constants: Err(e),
                rows: Vec::new(),
                failures: Vec::new(),
                claims: None,
            }
        }
    };
    let constants = recompute_constants();
    let (rows, failures) = match &constants {
        Err(_) => (Vec::new(), Vec::new()),
        Ok(c) => {
            let results: Vec<_> = ys.par_iter().map(|&y| (y, bounds_row(y, c, profile))).collect();
            let mut rows = Vec::new();
            let mut failures = Vec::new();
            for (y, r) in results {
                match r {
                    Ok(row) => rows.push(row),
                    Err(error) => failures.push(RowError { y, error }),
                }
            }
            (rows, failures)
        }
    };
    let claims = closing_claims(&rows);
    BoundsSection {
        grid,
        constants,
        rows,
        failures,
        claims,
    }
}

fn case_label(c: &IdentityCase) -> String {
    let p = c.spec.params;
    let mut parts = vec![c.spec.name.as_str().to_string(), c.variant.form.as_str().to_string()];
    if let Some(m) = p.m {
        parts.push(format!("m={m}"));
    }
    if let Some(x) = p.x {
        parts.push(format!("x={x}"));
    }
    if let Some(b) = p.beta {
        parts.push(format!("beta={}{:+}i", b.re, b.im));
    }
    if let Some(n) = p.n {
        parts.push(format!("n={n}"));
    }
    parts.join(" ")
}

/// Exit code and gating failures. Usage (2) outranks non-convergence (3),
/// which outranks verification failure (1).
fn judge(r: &RunReport) -> (i32, Vec<String>) {
    let mut failures = Vec::new();
    let mut usage = false;
    let mut non_convergence = false;

    for s in r.selftest.iter().filter(|s| !s.pass) {
        non_convergence |= s.non_convergence;
        failures.push(format!("selftest {}: {}", s.name, s.detail));
    }

    for c in r.cases.iter().filter(|c| !c.informational) {
        let label = case_label(c);
        if let Some(e) = &c.error {
            usage |= matches!(e, Error::Domain { .. });
            non_convergence |= e.is_non_convergence();
        }
        let unconverged = [c.lhs, c.rhs].iter().flatten().any(|s| !s.converged());
        non_convergence |= unconverged;
        if c.is_failure() {
            let why = match (&c.error, c.residual) {
                (Some(e), _) => e.to_string(),
                (None, Some(res)) if unconverged => format!("quadrature did not converge (residual {res:.2e})"),
                (None, Some(res)) => format!("residual {res:.2e}"),
                (None, None) => c.verdict.as_str().to_string(),
            };
            failures.push(format!("case {label}: {} ({why})", c.verdict.as_str()));
        }
    }

    if let Some(b) = &r.bounds {
        match &b.constants {
            Err(e) => {
                usage |= matches!(e, Error::Domain { .. });
                non_convergence |= e.is_non_convergence();
                failures.push(format!("bounds: {e}"));
            }
            Ok(c) => {
                let printed = xilab::bounds::PRINTED_CONSTANTS;
                for (name, q, printed) in [("c1", c.c1, printed.c1), ("c2", c.c2, printed.c2)] {
                    non_convergence |= !q.converged;
                    let delta = (q.value - printed).abs();
                    if delta > r.profile.constants_tol {
                        failures.push(format!("constant {name}: |recomputed - printed| = {delta:.2e}"));
                    }
                }
            }
        }
        for row in &b.rows {
            non_convergence |= !row.i_value.converged;
            if !row.sandwich_ok_derived {
                failures.push(format!("bounds y={:e}: derived sandwich violated", row.y));
            }
        }
        for f in &b.failures {
            non_convergence |= f.error.is_non_convergence();
            failures.push(format!("bounds y={:e}: {}", f.y, f.error));
        }
        if let Some(cl) = b.claims {
            if !cl.positive {
                failures.push("claim: I(y) > 0 violated".to_string());
            }
            if !cl.monotone {
                failures.push("claim: I(y) non-increasing violated".to_string());
            }
        }
    }

    let code = if usage {
        EXIT_USAGE
    } else if non_convergence {
        EXIT_NON_CONVERGENCE
    } else if !failures.is_empty() {
        EXIT_FAIL
    } else {
        EXIT_PASS
    };
    (code, failures)
}
