//! The Hardy integral `I(y) = ∫₀^∞ (ψ(t+1) − log t) e^{−yt²} dt`, the
//! constants of its two-sided bound, and the bounds themselves in printed and
//! re-derived form.
//!
//! Both bounds split the integral at `t = 1` and use
//! `1/(2t) − 1/(12t²) < ψ(t+1) − log t < 1/(2t)` on `[1, ∞)`. On `(0, 1]` the
//! lower bound uses Cauchy–Schwarz against `e^{yt²/2}`, the upper bound
//! against `e^{−yt²}`.

use crate::error::{Error, Result};
use crate::hardy::hardy_integral_complex;
use crate::identities::Form;
use crate::profile::ToleranceProfile;
use crate::quadrature::{try_integrate_log_singular, QuadResult};
use crate::specfun::{erf_family, expint_ei, psibar, ComplexValue, ErfKind, ERFI_ARGUMENT_LIMIT, EULER_GAMMA};
use std::f64::consts::PI;

/// Constants as printed, to the digits given.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrintedConstants {
    /// `∫₀¹ √(ψ(t+1) − log t) dt`
    pub c1: f64,
    /// `∫₀¹ (ψ(t+1) − log t)² dt`
    pub c2: f64,
    pub gamma: f64,
}

pub const PRINTED_CONSTANTS: PrintedConstants = PrintedConstants {
    c1: 0.952894,
    c2: 1.56624,
    gamma: EULER_GAMMA,
};

/// `c₁` and `c₂` by quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecomputedConstants {
    pub c1: QuadResult,
    pub c2: QuadResult,
}

/// Tolerance used for the constants.
pub const CONSTANTS_QUAD_TOL: f64 = 1e-9;

pub fn recompute_constants() -> Result<RecomputedConstants> {
    let c1 = try_integrate_log_singular(|t| Ok(psibar(0, t)?.sqrt()), 1.0, CONSTANTS_QUAD_TOL)?;
    let c2 = try_integrate_log_singular(|t| Ok(psibar(0, t)?.powi(2)), 1.0, CONSTANTS_QUAD_TOL)?;
    Ok(RecomputedConstants { c1, c2 })
}

/// `∫₀¹ (ψ(t+1) − log t) dt`, which equals 1 exactly and bounds `c₁²` by
/// Cauchy–Schwarz.
pub fn psibar_unit_integral(tol: f64) -> Result<QuadResult> {
    try_integrate_log_singular(|t| psibar(0, t), 1.0, tol)
}

/// Smallest and largest `y` accepted by [`hardy_integral`].
pub const HARDY_DOMAIN: (f64, f64) = (1e-3, 1e6);

/// `I(y)` for `1e-3 <= y <= 1e6`.
pub fn hardy_integral(y: f64, tol: f64) -> Result<QuadResult> {
    if !(y >= HARDY_DOMAIN.0 && y <= HARDY_DOMAIN.1) {
        return Err(Error::domain("hardy_integral", y, "1e-3 <= y <= 1e6"));
    }
    Ok(hardy_integral_complex(ComplexValue::new(y, 0.0), tol)?.re)
}

// √y / (√π erfi √y). Beyond the erfi guard, erfi(x) = 2/√π e^{x²} D(x) with
// Dawson's D(x) ~ (1/2x) Σ (2k−1)!!/(2x²)^k.
fn sqrt_y_over_erfi(y: f64) -> Result<f64> {
    let x = y.sqrt();
    if x <= ERFI_ARGUMENT_LIMIT {
        return Ok(x / (PI.sqrt() * erf_family(ErfKind::Erfi, x)?));
    }
    let inv = 1.0 / (2.0 * y);
    let mut term = 1.0;
    let mut series = 1.0;
    for k in 1..12 {
        term *= (2.0 * f64::from(k) - 1.0) * inv;
        series += term;
    }
    let dawson = series / (2.0 * x);
    Ok(x * (-y).exp() / (2.0 * dawson))
}

/// Lower bound on `I(y)`.
///
/// Printed: `(2c₁)² √y/(√π erfi √y) − Ei(−y)/4 − e^{−y}/12 + √(πy) erfi(√y)/12`,
/// with `erfi` clamped at argument 12. Derived:
/// `2c₁² √y/(√π erfi √y) − Ei(−y)/4 − e^{−y}/12 + √(πy) erfc(√y)/12`.
///
/// The flag is true when the printed form hit the clamp.
pub fn lower_bound(y: f64, form: Form, c1: f64) -> Result<(f64, bool)> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::domain("lower_bound", y, "y > 0"));
    }
    let common = -expint_ei(-y)? / 4.0 - (-y).exp() / 12.0;
    let root = (PI * y).sqrt();
    match form {
        Form::Corrected => {
            let head = 2.0 * c1 * c1 * sqrt_y_over_erfi(y)?;
            Ok((head + common + root * erf_family(ErfKind::Erfc, y.sqrt())? / 12.0, false))
        }
        Form::Printed => {
            let clamped = y.sqrt() > ERFI_ARGUMENT_LIMIT;
            let x = y.sqrt().min(ERFI_ARGUMENT_LIMIT);
            let erfi = erf_family(ErfKind::Erfi, x)?;
            let head = (2.0 * c1).powi(2) * x / (PI.sqrt() * erfi);
            Ok((head + common + root * erfi / 12.0, clamped))
        }
    }
}

/// Upper bound on `I(y)`: `√(c₂ √(π/(κy)) erf √(2y)) − Ei(−y)/4`, with `κ = 2`
/// printed and `κ = 8` derived (`∫₀¹ e^{−2yt²} dt = √(π/(8y)) erf √(2y)`).
pub fn upper_bound(y: f64, form: Form, c2: f64) -> Result<f64> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::domain("upper_bound", y, "y > 0"));
    }
    let kappa = match form {
        Form::Printed => 2.0,
        Form::Corrected => 8.0,
    };
    let gauss = (PI / (kappa * y)).sqrt() * erf_family(ErfKind::Erf, (2.0 * y).sqrt())?;
    Ok((c2 * gauss).sqrt() - expint_ei(-y)? / 4.0)
}

/// One grid point of a bounds scan. "Derived" bounds use the recomputed
/// constants, "printed" bounds the printed ones.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsRow {
    pub y: f64,
    pub lower_printed: f64,
    pub lower_derived: f64,
    pub i_value: QuadResult,
    pub upper_derived: f64,
    pub upper_printed: f64,
    pub sandwich_ok_derived: bool,
    pub sandwich_ok_printed: bool,
    /// `"overflow-clamped"` when the printed lower bound hit the erfi clamp.
    pub flags: Vec<&'static str>,
}

/// A failed row: the scan carries on past it.
#[derive(Debug, Clone, PartialEq)]
pub struct RowError {
    pub y: f64,
    pub error: Error,
}

/// Positivity, monotone decrease and decay of `I` along the grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosingClaims {
    pub positive: bool,
    /// `I(y_{k+1}) <= I(y_k) + 2·(error margins)` for every consecutive pair.
    pub monotone: bool,
    /// `I(y_last) / I(y_first)`.
    pub decay_ratio: f64,
    /// The ratio target the decay is checked against.
    pub decay_target: f64,
}

impl ClosingClaims {
    pub fn decay_ok(&self) -> bool {
        self.decay_ratio < self.decay_target
    }
}

/// Rows in grid order, row failures, and the closing claims over the rows that
/// succeeded.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsScan {
    pub rows: Vec<BoundsRow>,
    pub failures: Vec<RowError>,
    pub claims: Option<ClosingClaims>,
}

pub const DEFAULT_GRID: (f64, f64, usize) = (0.01, 100.0, 25);
pub const DECAY_TARGET: f64 = 1e-2;

/// `points` logarithmically spaced values from `min` to `max` inclusive.
pub fn log_grid(min: f64, max: f64, points: usize) -> Result<Vec<f64>> {
    if !(min > 0.0 && min < max && max.is_finite()) || points < 2 {
        return Err(Error::domain(
            "log_grid",
            format!("{min}:{max}:{points}"),
            "0 < min < max, points >= 2",
        ));
    }
    let (lo, hi) = (min.ln(), max.ln());
    let step = (hi - lo) / (points - 1) as f64;
    Ok((0..points)
        .map(|k| match k {
            0 => min,
            k if k == points - 1 => max,
            k => (lo + step * k as f64).exp(),
        })
        .collect())
}

/// One row. Exposed so callers can fan rows out across threads.
pub fn bounds_row(y: f64, constants: &RecomputedConstants, profile: &ToleranceProfile) -> Result<BoundsRow> {
    let i = hardy_integral(y, profile.quad_tol)?;
    let (lower_printed, clamped) = lower_bound(y, Form::Printed, PRINTED_CONSTANTS.c1)?;
    let (lower_derived, _) = lower_bound(y, Form::Corrected, constants.c1.value)?;
    let upper_derived = upper_bound(y, Form::Corrected, constants.c2.value)?;
    let upper_printed = upper_bound(y, Form::Printed, PRINTED_CONSTANTS.c2)?;
    let eps = i.abs_err_estimate;
    let within = |lo: f64, hi: f64| lo - eps <= i.value && i.value <= hi + eps;
    Ok(BoundsRow {
        y,
        lower_printed,
        lower_derived,
        i_value: i,
        upper_derived,
        upper_printed,
        sandwich_ok_derived: within(lower_derived, upper_derived),
        sandwich_ok_printed: within(lower_printed, upper_printed),
        flags: if clamped { vec!["overflow-clamped"] } else { Vec::new() },
    })
}

/// Closing claims over rows sorted by increasing `y`.
pub fn closing_claims(rows: &[BoundsRow]) -> Option<ClosingClaims> {
    let (first, last) = (rows.first()?, rows.last()?);
    let positive = rows.iter().all(|r| r.i_value.value > 0.0);
    let monotone = rows.windows(2).all(|w| {
        let margin = w[0].i_value.abs_err_estimate + w[1].i_value.abs_err_estimate;
        w[1].i_value.value <= w[0].i_value.value + 2.0 * margin
    });
    Some(ClosingClaims {
        positive,
        monotone,
        decay_ratio: last.i_value.value / first.i_value.value,
        decay_target: DECAY_TARGET,
    })
}

/// Sequential scan over `grid` (assumed increasing).
pub fn scan_bounds(grid: &[f64], profile: &ToleranceProfile) -> Result<BoundsScan> {
    let constants = recompute_constants()?;
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for &y in grid {
        match bounds_row(y, &constants, profile) {
            Ok(r) => rows.push(r),
            Err(error) => failures.push(RowError { y, error }),
        }
    }
    let claims = closing_claims(&rows);
    Ok(BoundsScan { rows, failures, claims })
}

/// `1/(2x) − 1/(12x²) < ψ(x+1) − log x < 1/(2x)` at `x`.
pub fn psibar_inequality_holds(x: f64) -> Result<bool> {
    let v = psibar(0, x)?;
    let upper = 0.5 / x;
    Ok(upper - upper / (6.0 * x) < v && v < upper)
}
