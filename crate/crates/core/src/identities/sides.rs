//! The two sides of each identity, evaluated independently.

use crate::error::{Error, Result};
use crate::hardy::{gaussian_weighted, hardy_integral_complex, ComplexQuad};
use crate::quadrature::{
    try_integrate_log_singular, try_integrate_semi_infinite, DecayHint, QuadResult,
};
use crate::specfun::{
    digamma, gamma_ratio_poch, k0_lattice_sum, log_gaussian_moment, psibar, theta_bracket, xi_upper,
    ComplexValue, EULER_GAMMA,
};
use std::f64::consts::{FRAC_PI_8, PI};

use super::Form;

/// Largest `|Im β′|` accepted by the cosine-kernel evaluators. `Re(π e^{4β′})`
/// must stay positive, which needs `|Im β′| < π/8`.
pub const COSINE13_IM_LIMIT: f64 = FRAC_PI_8 - 0.05;

fn check_range(function: &'static str, v: f64, lo: f64, hi: f64, expected: &'static str) -> Result<()> {
    if v >= lo && v <= hi {
        Ok(())
    } else {
        Err(Error::domain(function, v, expected))
    }
}

fn real(q: QuadResult) -> ComplexQuad {
    ComplexQuad {
        re: q,
        im: QuadResult {
            value: 0.0,
            abs_err_estimate: 0.0,
            evaluations: 1,
            converged: true,
        },
    }
}

fn xi_kernel_integral<F>(f: F, rate: f64, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<f64>,
{
    try_integrate_semi_infinite(f, 0.0, tol, DecayHint::Exponential { rate })
}

/// `∫₀^∞ Ξ(t/2) cos(xt) / ((1+t²) cosh(πt/2)) dt` for `0 <= x <= 5`.
pub fn hardy_lhs(x: f64, tol: f64) -> Result<QuadResult> {
    check_range("hardy_lhs", x, 0.0, 5.0, "0 <= x <= 5")?;
    xi_kernel_integral(
        |t| Ok(xi_upper(0.5 * t)? * (x * t).cos() / ((1.0 + t * t) * (0.5 * PI * t).cosh())),
        0.5 * PI,
        tol,
    )
}

/// `¼e^{−x}(2x + γ/2 + (log π)/2 + log 2) + ½eˣ ∫₀^∞ ψ(t+1) e^{−πt²e^{4x}} dt`.
pub fn hardy_rhs(x: f64, tol: f64) -> Result<QuadResult> {
    check_range("hardy_rhs", x, 0.0, 5.0, "0 <= x <= 5")?;
    let half_ex = 0.5 * x.exp();
    let c = ComplexValue::new(PI * (4.0 * x).exp(), 0.0);
    let q = gaussian_weighted(|t| digamma(t + 1.0), c, tol / half_ex)?.re;
    Ok(q.scaled(half_ex).shifted(hardy_constant_term(x)))
}

fn hardy_constant_term(x: f64) -> f64 {
    0.25 * (-x).exp() * (2.0 * x + 0.5 * EULER_GAMMA + 0.5 * PI.ln() + 2f64.ln())
}

/// `½ eˣ I(π e^{4x})`, the log-subtracted form of [`hardy_rhs`].
pub fn hardy_rhs_subtracted(x: f64, tol: f64) -> Result<QuadResult> {
    check_range("hardy_rhs_subtracted", x, 0.0, 5.0, "0 <= x <= 5")?;
    let half_ex = 0.5 * x.exp();
    let c = ComplexValue::new(PI * (4.0 * x).exp(), 0.0);
    Ok(hardy_integral_complex(c, tol / half_ex)?.re.scaled(half_ex))
}

/// How well the constant term of [`hardy_rhs`] accounts for the `log t`
/// subtracted in [`hardy_rhs_subtracted`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BridgeCheck {
    /// Constant term plus `½eˣ ∫ e^{−πt²e^{4x}} log t dt` in closed form.
    pub closed_form: f64,
    /// `hardy_rhs(x) − hardy_rhs_subtracted(x)` by quadrature.
    pub quadrature: f64,
    pub abs_err_estimate: f64,
}

pub fn hardy_bridge(x: f64, tol: f64) -> Result<BridgeCheck> {
    let a = PI * (4.0 * x).exp();
    let closed_form = hardy_constant_term(x) + 0.5 * x.exp() * log_gaussian_moment(a)?;
    let full = hardy_rhs(x, tol)?;
    let sub = hardy_rhs_subtracted(x, tol)?;
    Ok(BridgeCheck {
        closed_form,
        quadrature: full.value - sub.value,
        abs_err_estimate: full.abs_err_estimate + sub.abs_err_estimate,
    })
}

fn check_genpsi(function: &'static str, m: u32, x: f64) -> Result<()> {
    if m > 3 {
        return Err(Error::domain(function, m, "0 <= m <= 3"));
    }
    check_range(function, x, -1.5, 1.5, "|x| <= 1.5")
}

/// `(−1)^m eˣ ∫₀^∞ t^m ψ̄_m(t) e^{−πt²e^{4x}} dt`.
pub fn genpsi_lhs(m: u32, x: f64, tol: f64) -> Result<QuadResult> {
    check_genpsi("genpsi_lhs", m, x)?;
    let ex = x.exp();
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let c = ComplexValue::new(PI * (4.0 * x).exp(), 0.0);
    let q = gaussian_weighted(|t| Ok(t.powi(m as i32) * psibar(m, t)?), c, tol / ex)?.re;
    Ok(q.scaled(sign * ex))
}

/// `½ ∫₀^∞ Ξ(t)/(cosh(πt)(t²+¼)) · [P_m(−t) e^{−2ixt} + P_m(t) e^{2ixt}] dt`
/// with `P_m(t) = Γ(½+it+m)/Γ(½+it)`.
pub fn genpsi_rhs(m: u32, x: f64, tol: f64) -> Result<QuadResult> {
    check_genpsi("genpsi_rhs", m, x)?;
    xi_kernel_integral(
        |t| {
            let phase = ComplexValue::from_polar(1.0, 2.0 * x * t);
            let sum = gamma_ratio_poch(m, -t)? * phase.conj() + gamma_ratio_poch(m, t)? * phase;
            let scale = sum.norm().max(1.0);
            if sum.im.abs() > 1e-12 * scale {
                return Err(Error::NotReal {
                    function: "genpsi_rhs integrand",
                    residue: sum.im,
                    scale,
                    tolerance: 1e-12,
                });
            }
            Ok(0.5 * xi_upper(t)? * sum.re / ((PI * t).cosh() * (t * t + 0.25)))
        },
        PI,
        tol,
    )
}

/// `∫₀^∞ Ξ²(t) cos(xt) / ((t²+¼)² cosh(πt)) dt` for `0 <= x <= 3`.
pub fn kosh2_rhs(x: f64, tol: f64) -> Result<QuadResult> {
    check_range("kosh2_rhs", x, 0.0, 3.0, "0 <= x <= 3")?;
    xi_kernel_integral(
        |t| {
            let xi = xi_upper(t)?;
            let d = t * t + 0.25;
            Ok(xi * xi * (x * t).cos() / (d * d * (PI * t).cosh()))
        },
        1.25 * PI,
        tol,
    )
}

/// The bracket multiplying `ψ(t+1) − log t` on the squared-kernel left side.
///
/// Printed: `2πe^{x/2}/t − 4e^{−x/2} Σ K₀(2πnte^{−x})`. Corrected:
/// `−¼ e^{−x/2} S(2πte^{−x})`, which is integrable at the origin.
pub fn kosh2_bracket(x: f64, t: f64, form: Form) -> Result<f64> {
    let a = 2.0 * PI * t * (-x).exp();
    let s = k0_lattice_sum(a)?;
    let damp = (-0.5 * x).exp();
    Ok(match form {
        // 4ΣK₀(a) = S(a) + 2π/a and 2π/a = eˣ/t
        Form::Printed => 2.0 * PI * (0.5 * x).exp() / t - damp * (s + x.exp() / t),
        Form::Corrected => -0.25 * damp * s,
    })
}

/// Probe points of the small-`t` divergence monitor.
pub const DIVERGENCE_PROBES: [f64; 3] = [1e-3, 1e-4, 1e-5];
/// `|t · bracket(t)|` above this at every probe flags a `1/t` blow-up.
pub const DIVERGENCE_THRESHOLD: f64 = 0.1;

/// `t · bracket(t)` at each probe, and whether all exceed the threshold.
pub fn kosh2_divergence_probe(x: f64, form: Form) -> Result<([f64; 3], bool)> {
    let mut out = [0.0; 3];
    for (slot, &t) in out.iter_mut().zip(DIVERGENCE_PROBES.iter()) {
        *slot = t * kosh2_bracket(x, t, form)?;
    }
    Ok((out, out.iter().all(|v| v.abs() > DIVERGENCE_THRESHOLD)))
}

/// `∫₀^∞ (ψ(t+1) − log t) · bracket(t) dt`. Only meaningful for the
/// corrected bracket; the printed one is not integrable.
///
/// `(0, 1]` uses the log-singular wrapper; on `[1, ∞)` the integrand decays
/// like `t^{−2}`, so `t = eᵘ` turns it into an exponentially decaying one.
pub fn kosh2_lhs(x: f64, form: Form, tol: f64) -> Result<QuadResult> {
    check_range("kosh2_lhs", x, 0.0, 3.0, "0 <= x <= 3")?;
    let f = |t: f64| Ok(psibar(0, t)? * kosh2_bracket(x, t, form)?);
    let head = try_integrate_log_singular(f, 1.0, 0.5 * tol)?;
    let tail = try_integrate_semi_infinite(
        |u: f64| {
            let t = u.exp();
            Ok(t * f(t)?)
        },
        0.0,
        0.5 * tol,
        DecayHint::Exponential { rate: 1.0 },
    )?;
    Ok(head.plus(tail))
}

fn check_beta(function: &'static str, beta: ComplexValue) -> Result<()> {
    if beta.re.abs() <= 3.0 && beta.im.abs() <= COSINE13_IM_LIMIT {
        Ok(())
    } else {
        Err(Error::domain(function, beta, "|Re β′| <= 3 and |Im β′| <= π/8 − 0.05"))
    }
}

/// Printed kernel `cosh t / (cosh 2t + cosh 2β′)`, corrected kernel
/// `cosh(t/2) / (cosh t + cosh 2β′)`.
fn cosine13_kernel(t: f64, w: ComplexValue, form: Form) -> ComplexValue {
    let (num, den) = match form {
        Form::Printed => (t.cosh(), (2.0 * t).cosh()),
        Form::Corrected => ((0.5 * t).cosh(), t.cosh()),
    };
    num / (den + w)
}

/// `∫₀^∞ kernel(t, β′) (e^{t/2} − 2e^{−t/2} R(e^{−2t})) dt`, as two real quadratures.
pub fn cosine13_lhs(beta: ComplexValue, form: Form, tol: f64) -> Result<ComplexQuad> {
    check_beta("cosine13_lhs", beta)?;
    let w = (2.0 * beta).cosh();
    let rate = match form {
        Form::Printed => 1.5,
        Form::Corrected => 1.0,
    };
    let part = |pick: fn(ComplexValue) -> f64| {
        try_integrate_semi_infinite(
            |t| Ok(pick(cosine13_kernel(t, w, form)) * theta_bracket(t)?),
            0.0,
            tol,
            DecayHint::Exponential { rate },
        )
    };
    let re = part(|z| z.re)?;
    if beta.im == 0.0 {
        return Ok(real(re));
    }
    Ok(ComplexQuad { re, im: part(|z| z.im)? })
}

/// Printed: `π e^{β′} / (4 cosh β′) · I(π e^{4β′})`; corrected:
/// `e^{β′} / cosh β′ · I(π e^{4β′})`.
pub fn cosine13_rhs(beta: ComplexValue, form: Form, tol: f64) -> Result<ComplexQuad> {
    check_beta("cosine13_rhs", beta)?;
    let mut prefactor = beta.exp() / beta.cosh();
    if form == Form::Printed {
        prefactor *= 0.25 * PI;
    }
    let pn = prefactor.norm();
    let i = hardy_integral_complex(PI * (4.0 * beta).exp(), tol / pn)?;
    let value = prefactor * ComplexValue::new(i.re.value, i.im.value);
    let err = pn * (i.re.abs_err_estimate + i.im.abs_err_estimate);
    let mk = |v: f64| QuadResult {
        value: v,
        abs_err_estimate: err,
        evaluations: i.re.evaluations + i.im.evaluations,
        converged: i.re.converged && i.im.converged,
    };
    Ok(ComplexQuad {
        re: mk(value.re),
        im: mk(if beta.im == 0.0 { 0.0 } else { value.im }),
    })
}

/// `∫₀^∞ t^{2n} Ξ(t) dt` for `0 <= n <= 3`. The tolerance is relative to the
/// magnitude, which reaches ~1.6e5 at `n = 3`.
pub fn xi_moment(n: u32, tol: f64) -> Result<QuadResult> {
    if n > 3 {
        return Err(Error::domain("xi_moment", n, "0 <= n <= 3"));
    }
    let f = |t: f64| Ok(t.powi(2 * n as i32) * xi_upper(t)?);
    let hint = DecayHint::PolynomialTimesExponential { rate: 0.25 * PI };
    let rough = try_integrate_semi_infinite(f, 0.0, 1e-3, hint)?;
    let mut fine = try_integrate_semi_infinite(f, 0.0, tol * rough.value.abs().max(1.0), hint)?;
    fine.evaluations += rough.evaluations;
    Ok(fine)
}
