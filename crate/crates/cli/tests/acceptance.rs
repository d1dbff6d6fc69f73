//! Acceptance run: every criterion at its stated tolerance, one line each.
//!
//! Two criteria are known to be unattainable as stated (the printed
//! cosine-kernel identity, and the I(100)/I(0.01) < 1e-2 decay ratio). They are
//! evaluated exactly as stated and asserted to stay red, so a change in
//! either outcome is noticed.

#[path = "../../core/tests/oracles/mod.rs"]
mod oracles;

use num_complex::Complex64;
use std::io::Write;
use std::process::Command;
use xilab::bounds::{log_grid, psibar_inequality_holds, recompute_constants, scan_bounds, DEFAULT_GRID, PRINTED_CONSTANTS};
use xilab::identities::{
    default_cases, genpsi_rhs, hardy_bridge, hardy_lhs, verify, CaseName, CaseSpec, Form, IdentityCase, Verdict,
    VariantChoice, COSINE13_GRID,
};
use xilab::specfun::{bessel_k0, k0_lattice_sum_direct, k0_lattice_sum_lattice, psibar, theta_rest, xi_upper, zeta};
use xilab::ToleranceProfile;

const KNOWN_RED: [u32; 2] = [5, 7];
const FIRST_ZERO: f64 = 14.134_725_141_7;

struct Outcome {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn converged(c: &IdentityCase) -> bool {
    [c.lhs, c.rhs].iter().flatten().all(|s| s.converged())
}

fn max_residual(cases: &[IdentityCase]) -> f64 {
    cases.iter().filter_map(|c| c.residual).fold(0.0, f64::max)
}

fn constants() -> Outcome {
    let c = recompute_constants().unwrap();
    let d1 = (c.c1.value - PRINTED_CONSTANTS.c1).abs();
    let d2 = (c.c2.value - PRINTED_CONSTANTS.c2).abs();
    Outcome {
        id: 1,
        title: "constants c1, c2 reproduced",
        pass: d1 <= 5e-7 && d2 <= 5e-6 && c.c1.converged && c.c2.converged,
        detail: format!("|dc1| = {d1:.2e} (<= 5e-7), |dc2| = {d2:.2e} (<= 5e-6)"),
    }
}

fn hardy(profile: &ToleranceProfile) -> Outcome {
    let cases: Vec<_> = default_cases(CaseName::Hardy11, VariantChoice::Both)
        .into_iter()
        .map(|s| verify(s, profile))
        .collect();
    let worst = max_residual(&cases);
    let ok = cases.len() == 5 && cases.iter().all(|c| c.residual.is_some_and(|r| r <= 1e-8) && converged(c));
    let mut bridge = 0.0f64;
    for x in [0.0, 0.25, 0.5, 1.0, 2.0] {
        let b = hardy_bridge(x, 1e-12).unwrap();
        bridge = bridge.max(b.closed_form.abs()).max(b.quadrature.abs());
    }
    Outcome {
        id: 2,
        title: "Hardy cosine identity and closed-form bridge",
        pass: ok && bridge <= 1e-10,
        detail: format!("max residual {worst:.2e} (<= 1e-8), bridge {bridge:.2e} (<= 1e-10)"),
    }
}

fn genpsi(profile: &ToleranceProfile) -> Outcome {
    let cases: Vec<_> = default_cases(CaseName::Genpsi, VariantChoice::Both)
        .into_iter()
        .map(|s| verify(s, profile))
        .collect();
    let worst = max_residual(&cases);
    let ok = cases.len() == 12 && cases.iter().all(|c| c.residual.is_some_and(|r| r <= 1e-7) && converged(c));
    let mut cross = 0.0f64;
    for x in [0.0, 0.5, 1.0] {
        let h = hardy_lhs(x, profile.quad_tol).unwrap().value;
        let g = genpsi_rhs(0, x, profile.quad_tol).unwrap().value;
        cross = cross.max((h - 0.5 * g).abs());
    }
    Outcome {
        id: 3,
        title: "polygamma family over m = 0..3",
        pass: ok && cross <= 1e-9,
        detail: format!("max residual {worst:.2e} (<= 1e-7), m = 0 cross-check {cross:.2e} (<= 1e-9)"),
    }
}

fn kosh2(profile: &ToleranceProfile) -> Outcome {
    let mut divergent = 0;
    let mut worst = 0.0f64;
    let mut ok = true;
    for x in [0.0, 0.5, 1.0] {
        let p = verify(CaseSpec::kosh2(x, Form::Printed), profile);
        if p.verdict == Verdict::Divergent {
            divergent += 1;
        }
        let c = verify(CaseSpec::kosh2(x, Form::Corrected), profile);
        let r = c.residual.unwrap_or(f64::INFINITY);
        worst = worst.max(r);
        ok &= r <= 1e-6 && converged(&c);
    }
    Outcome {
        id: 4,
        title: "squared-kernel identity: printed divergent, corrected holds",
        pass: divergent == 3 && ok,
        detail: format!("printed DIVERGENT at {divergent}/3 x, corrected max residual {worst:.2e} (<= 1e-6)"),
    }
}

fn cosine13(profile: &ToleranceProfile) -> Outcome {
    let mut printed_ok = true;
    let mut printed_worst = 0.0f64;
    let mut corrected_worst = 0.0f64;
    for (re, im) in COSINE13_GRID {
        let beta = Complex64::new(re, im);
        let limit = if im == 0.0 { 1e-8 } else { 1e-7 };
        let p = verify(CaseSpec::cosine13(beta, Form::Printed), profile);
        let r = p.residual.unwrap_or(f64::INFINITY);
        printed_worst = printed_worst.max(r);
        printed_ok &= r <= limit && converged(&p);
        let c = verify(CaseSpec::cosine13(beta, Form::Corrected), profile);
        corrected_worst = corrected_worst.max(c.residual.unwrap_or(f64::INFINITY));
    }
    Outcome {
        id: 5,
        title: "cosine-kernel identity in beta (printed form)",
        pass: printed_ok,
        detail: format!(
            "printed max residual {printed_worst:.2e} (<= 1e-8 real, 1e-7 complex); corrected form {corrected_worst:.2e}"
        ),
    }
}

fn sandwich(profile: &ToleranceProfile) -> Outcome {
    let (min, max, n) = DEFAULT_GRID;
    let scan = scan_bounds(&log_grid(min, max, n).unwrap(), profile).unwrap();
    let held = scan.rows.iter().filter(|r| r.sandwich_ok_derived && r.i_value.converged).count();
    let last = scan.rows.last().unwrap();
    let printed_exceeds = last.lower_printed > last.i_value.value;
    let printed_count = scan.rows.iter().filter(|r| r.lower_printed > r.i_value.value).count();
    Outcome {
        id: 6,
        title: "two-sided bounds (derived variant)",
        pass: held == n && scan.failures.is_empty() && printed_exceeds,
        detail: format!(
            "derived sandwich at {held}/{n} points; printed lower bound exceeds I(y) at {printed_count}/{n} (y = 100: {:.3e} vs {:.3e})",
            last.lower_printed, last.i_value.value
        ),
    }
}

fn closing(profile: &ToleranceProfile) -> Outcome {
    let (min, max, n) = DEFAULT_GRID;
    let scan = scan_bounds(&log_grid(min, max, n).unwrap(), profile).unwrap();
    let c = scan.claims.unwrap();
    Outcome {
        id: 7,
        title: "closing claims: positive, decaying, non-increasing",
        pass: c.positive && c.monotone && c.decay_ok(),
        detail: format!(
            "positive {}, monotone {}, I(100)/I(0.01) = {:.4} (< {:e} required)",
            c.positive, c.monotone, c.decay_ratio, c.decay_target
        ),
    }
}

fn kernels() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    let mut record = |name: &str, err: f64, limit: f64| {
        pass &= err <= limit;
        parts.push(format!("{name} {err:.1e}"));
    };

    let half = Complex64::new(0.5, 0.0);
    record("zeta(1/2)", (zeta(half).unwrap() - oracles::zeta_eta(half)).norm(), 1e-12);

    let (mut lo, mut hi) = (14.0, 14.3);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if xi_upper(lo).unwrap() * xi_upper(mid).unwrap() <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    record("Xi zero", (0.5 * (lo + hi) - FIRST_ZERO).abs(), 1e-6);

    let k = oracles::k0_integral(1.0);
    record("K0(1)", (bessel_k0(1.0).unwrap() - k).abs() / k, 1e-12);

    let mut theta = 0.0f64;
    for i in -30..=30 {
        let y = (2.0 * 0.1 * f64::from(i)).exp();
        let lhs = 1.0 + 2.0 * oracles::theta_rest_brute(1.0 / y);
        let rhs = y.sqrt() * (1.0 + 2.0 * theta_rest(y).unwrap());
        theta = theta.max((lhs - rhs).abs() / (1.0 + rhs.abs()));
    }
    record("theta", theta, 1e-12);

    let mut lattice = 0.0f64;
    for i in 0..=30 {
        let a = 0.5 + 0.05 * f64::from(i);
        lattice = lattice.max((k0_lattice_sum_direct(a).unwrap() - k0_lattice_sum_lattice(a).unwrap()).abs());
    }
    record("S(a) paths", lattice, 1e-10);

    let grid = log_grid(1e-3, 1e3, 61).unwrap();
    let violations = grid.iter().filter(|&&x| !psibar_inequality_holds(x).unwrap()).count();
    record("digamma inequality violations", violations as f64, 0.0);
    // the inequality is strict, so psibar must also be positive
    pass &= grid.iter().all(|&x| psibar(0, x).unwrap() > 0.0);

    Outcome {
        id: 8,
        title: "kernel oracles",
        pass,
        detail: parts.join(", "),
    }
}

fn determinism() -> Outcome {
    let report = |jobs: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_xilab"))
            .args(["report", "--jobs", jobs])
            .env_remove("XILAB_PROFILE")
            .output()
            .unwrap();
        assert!(out.status.code().is_some());
        out.stdout
    };
    let one = report("1");
    let eight = report("8");
    let again = report("1");
    Outcome {
        id: 9,
        title: "byte-identical reports for --jobs 1 and --jobs 8",
        pass: !one.is_empty() && one == eight && one == again,
        detail: format!("{} bytes, jobs 1 == jobs 8: {}, repeat identical: {}", one.len(), one == eight, one == again),
    }
}

#[test]
fn acceptance() {
    let profile = ToleranceProfile::default();
    let outcomes = [
        constants(),
        hardy(&profile),
        genpsi(&profile),
        kosh2(&profile),
        cosine13(&profile),
        sandwich(&profile),
        closing(&profile),
        kernels(),
        determinism(),
    ];
    let mut out = std::io::stdout().lock();
    for o in &outcomes {
        let status = if o.pass { "PASS" } else { "FAIL" };
        let known = if KNOWN_RED.contains(&o.id) { " [known red]" } else { "" };
        writeln!(out, "acceptance {}: {status}{known}  {}: {}", o.id, o.title, o.detail).unwrap();
    }
    drop(out);
    for o in &outcomes {
        let expected = !KNOWN_RED.contains(&o.id);
        assert_eq!(o.pass, expected, "criterion {} ({}): {}", o.id, o.title, o.detail);
    }
}
