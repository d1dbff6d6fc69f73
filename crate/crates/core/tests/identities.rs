mod oracles;

use oracles::frozen::*;
use std::f64::consts::PI;
use xilab::bounds::hardy_integral;
use xilab::identities::*;
use xilab::specfun::{theta_bracket, xi_upper, ComplexValue};
use xilab::ToleranceProfile;

const TOL: f64 = 1e-11;

fn profile() -> ToleranceProfile {
    ToleranceProfile::default()
}

#[test]
fn hardy_sides_match_frozen_values() {
    assert!((hardy_lhs(0.0, TOL).unwrap().value - HARDY_LHS_ZERO).abs() < 1e-10);
    assert!((hardy_rhs(2.0, TOL).unwrap().value - HARDY_RHS_TWO).abs() < 1e-10);
    // fixed-step trapezoid on the even integrand
    let f = |t: f64| xi_upper(0.5 * t).unwrap() / ((1.0 + t * t) * (0.5 * PI * t).cosh());
    let trap = oracles::trapezoid(f, 0.0, 60.0, 2400);
    assert!((trap - HARDY_LHS_ZERO).abs() < 1e-12);
}

#[test]
fn hardy_integrand_negligible_at_thirty() {
    let f = |t: f64| xi_upper(0.5 * t).unwrap() / ((1.0 + t * t) * (0.5 * PI * t).cosh());
    assert!(f(30.0).abs() < 1e-15 * f(0.0));
}

#[test]
fn hardy_rhs_at_zero_by_direct_quadrature() {
    let c = 0.25 * (0.5 * oracles::EULER_GAMMA + 0.5 * PI.ln() + 2f64.ln());
    let q = oracles::exp_sinh(
        |t| xilab::specfun::digamma(t + 1.0).unwrap() * (-PI * t * t).exp(),
        0.01,
    );
    assert!((hardy_rhs(0.0, TOL).unwrap().value - (c + 0.5 * q)).abs() < 1e-11);
}

#[test]
fn hardy_identity_holds() {
    for x in HARDY11_GRID {
        let case = verify(CaseSpec::hardy11(x), &profile());
        assert_eq!(case.verdict, Verdict::Pass, "{case:?}");
        assert!(case.residual.unwrap() <= 1e-8);
    }
}

#[test]
fn closed_form_bridge() {
    for x in [0.0, 0.25, 0.5, 1.0, 2.0] {
        let b = hardy_bridge(x, 1e-12).unwrap();
        assert!(b.closed_form.abs() < 1e-15, "x={x} {b:?}");
        assert!(b.quadrature.abs() <= 1e-10, "x={x} {b:?}");
    }
}

#[test]
fn hardy_lhs_is_half_of_genpsi_rhs_at_m_zero() {
    for x in [0.0, 0.25, 0.5, 1.0] {
        let h = hardy_lhs(x, TOL).unwrap().value;
        let g = genpsi_rhs(0, x, TOL).unwrap().value;
        assert!((h - 0.5 * g).abs() < 1e-9, "x={x}");
    }
}

#[test]
fn genpsi_m0_is_scaled_hardy_integral() {
    let g = genpsi_lhs(0, 0.0, TOL).unwrap().value;
    assert!((g - hardy_integral(PI, TOL).unwrap().value).abs() < 1e-11);
    assert!((g - HARDY_INTEGRAL_PI).abs() < 1e-10);
    for x in [-0.5, 0.5, 1.0] {
        let g = genpsi_lhs(0, x, TOL).unwrap().value;
        let i = hardy_integral(PI * (4.0 * x).exp(), TOL).unwrap().value;
        assert!((g - x.exp() * i).abs() < 1e-10);
    }
    assert!((genpsi_lhs(1, 0.0, TOL).unwrap().value - GENPSI_M1_X0).abs() < 1e-10);
    assert!((genpsi_rhs(0, 0.0, TOL).unwrap().value - XI_KERNEL_INTEGRAL).abs() < 1e-10);
}

#[test]
fn genpsi_identity_holds() {
    for m in GENPSI_M_GRID {
        for x in GENPSI_X_GRID {
            let case = verify(CaseSpec::genpsi(m, x), &profile());
            assert_eq!(case.verdict, Verdict::Pass, "{case:?}");
        }
    }
}

#[test]
fn kosh2_right_side() {
    assert!((kosh2_rhs(0.0, TOL).unwrap().value - KOSH2_RHS_ZERO).abs() < 1e-10);
    assert!((kosh2_rhs(1.0, TOL).unwrap().value - KOSH2_RHS_ONE).abs() < 1e-10);
}

#[test]
fn kosh2_printed_diverges_and_corrected_holds() {
    for x in KOSH2_GRID {
        let printed = verify(CaseSpec::kosh2(x, Form::Printed), &profile());
        assert_eq!(printed.verdict, Verdict::Divergent);
        assert!(printed.informational && !printed.is_failure());
        assert!(printed.lhs.is_none());
        let corrected = verify(CaseSpec::kosh2(x, Form::Corrected), &profile());
        assert_eq!(corrected.verdict, Verdict::Pass);
        assert!(corrected.residual.unwrap() <= 1e-6);
        assert!(corrected.variant.note.contains("Mellin"));
    }
}

#[test]
fn cosine13_printed_at_zero_reduces_to_sech_kernel() {
    let q = cosine13_lhs(ComplexValue::new(0.0, 0.0), Form::Printed, TOL).unwrap();
    let direct = oracles::exp_sinh(|t| 0.5 * theta_bracket(t).unwrap() / t.cosh(), 0.01);
    assert!((q.re.value - direct).abs() < 1e-10);
    let rhs = cosine13_rhs(ComplexValue::new(0.0, 0.0), Form::Printed, TOL).unwrap();
    assert!((rhs.re.value - 0.25 * PI * HARDY_INTEGRAL_PI).abs() < 1e-10);
}

#[test]
fn cosine13_right_side_values() {
    let b = ComplexValue::new(0.25, 0.0);
    assert!((cosine13_rhs(b, Form::Printed, TOL).unwrap().re.value - COSINE13_RHS_QUARTER_PRINTED).abs() < 1e-10);
    assert!((cosine13_rhs(b, Form::Corrected, TOL).unwrap().re.value - COSINE13_RHS_QUARTER_CORRECTED).abs() < 1e-10);
    let minus = cosine13_rhs(-b, Form::Corrected, TOL).unwrap().re.value;
    assert!((minus - COSINE13_RHS_MINUS_QUARTER_CORRECTED).abs() < 1e-10);
    // e^{β}/cosh β + e^{−β}/cosh β = 2 is the only asymmetry
    let plus = cosine13_rhs(b, Form::Corrected, TOL).unwrap().re.value;
    let i_plus = hardy_integral(PI * (1.0f64).exp(), TOL).unwrap().value;
    let i_minus = hardy_integral(PI * (-1.0f64).exp(), TOL).unwrap().value;
    let pre = |s: f64| (s * 0.25f64).exp() / 0.25f64.cosh();
    assert!((plus - pre(1.0) * i_plus).abs() < 1e-10);
    assert!((minus - pre(-1.0) * i_minus).abs() < 1e-10);
}

#[test]
fn cosine13_corrected_holds_at_complex_beta() {
    for (re, im) in COSINE13_GRID {
        let case = verify(CaseSpec::cosine13(ComplexValue::new(re, im), Form::Corrected), &profile());
        assert_eq!(case.verdict, Verdict::Pass, "{case:?}");
        assert!(case.residual.unwrap() <= 1e-8);
        assert_eq!(case.lhs.unwrap().im.is_some(), im != 0.0);
    }
}

#[test]
fn cosine13_printed_is_off_by_a_visible_margin() {
    let case = verify(CaseSpec::cosine13(ComplexValue::new(0.0, 0.0), Form::Printed), &profile());
    assert_eq!(case.verdict, Verdict::Fail);
    assert!(case.informational);
    let lhs = case.lhs.unwrap().value().re;
    let rhs = case.rhs.unwrap().value().re;
    assert!((lhs - 0.48180).abs() < 1e-5 && (rhs - 0.53989).abs() < 1e-5);
}

#[test]
fn xi_moments() {
    for (n, expected) in [XI_MOMENT_0, XI_MOMENT_1, XI_MOMENT_2, XI_MOMENT_3].into_iter().enumerate() {
        let case = verify(CaseSpec::ximoment(n as u32), &profile());
        assert_eq!(case.verdict, Verdict::Skipped);
        let v = case.lhs.unwrap().re.value;
        assert!(((v - expected) / expected).abs() < 1e-10, "n={n}: {v}");
        assert!(case.note.unwrap().contains("positive"));
    }
}

#[test]
fn verify_is_deterministic() {
    let a = verify(CaseSpec::cosine13(ComplexValue::new(0.3, 0.2), Form::Corrected), &profile());
    let b = verify(CaseSpec::cosine13(ComplexValue::new(0.3, 0.2), Form::Corrected), &profile());
    assert_eq!(a, b);
}
