//! Adaptive quadrature on finite intervals, half-lines with a decay hint, and
//! `(0, b]` with an integrable logarithmic singularity at the origin.
//!
//! All tolerances are absolute. Every entry point has an infallible form
//! taking `Fn(f64) -> f64` and a `try_` form whose integrand may fail; kernel
//! errors raised inside the integrand abort the integration and are returned
//! unchanged. A non-finite integrand value is reported as
//! [`Error::NonFinite`](crate::Error::NonFinite).
//!
//! The engine is sequential and deterministic: panels are refined in order of
//! decreasing error estimate (ties broken by creation order) and the final sum
//! is a pairwise reduction over panels sorted by position.

mod gauss_kronrod;
mod tail;

use crate::error::{Error, Result};
use gauss_kronrod::adaptive;
pub use tail::DecayHint;

/// Panels the finite part of a half-line integral starts from.
const SEMI_INFINITE_INITIAL_PANELS: usize = 8;

/// Value, error estimate and bookkeeping for one integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_err_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl QuadResult {
    /// Multiplies value and error by a constant.
    pub fn scaled(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            abs_err_estimate: self.abs_err_estimate * factor.abs(),
            ..self
        }
    }

    /// Adds a constant known to machine precision.
    pub fn shifted(self, offset: f64) -> Self {
        Self {
            value: self.value + offset,
            abs_err_estimate: self.abs_err_estimate + f64::EPSILON * offset.abs(),
            ..self
        }
    }

    /// Sum of two independent integrals.
    pub fn plus(self, other: Self) -> Self {
        Self {
            value: self.value + other.value,
            abs_err_estimate: self.abs_err_estimate + other.abs_err_estimate,
            evaluations: self.evaluations + other.evaluations,
            converged: self.converged && other.converged,
        }
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::domain("quadrature", tol, "tol > 0"))
    }
}

/// `∫_a^b f` by adaptive G7/K15 bisection, at most 2000 panels.
///
/// Running out of panels is not an error: the best estimate comes back with
/// `converged == false`.
pub fn integrate_finite<F>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    try_integrate_finite(|t| Ok(f(t)), a, b, tol)
}

/// Fallible-integrand form of [`integrate_finite`].
pub fn try_integrate_finite<F>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<f64>,
{
    check_tol(tol)?;
    if !(a.is_finite() && b.is_finite() && a < b) {
        return Err(Error::domain("integrate_finite", format!("[{a}, {b}]"), "finite a < b"));
    }
    let out = adaptive(&f, a, b, 1, tol)?;
    Ok(QuadResult {
        value: out.value,
        abs_err_estimate: out.err,
        evaluations: out.evaluations,
        converged: out.converged,
    })
}

/// `∫_a^∞ f` for `f` decaying as described by `hint`.
///
/// A cut-off `T` is chosen so that a tail bound fitted to samples of `|f|`
/// beyond `T` (with a ×10 safety factor) is below `tol/2`; that bound is added
/// to the error estimate of the finite part.
pub fn integrate_semi_infinite<F>(f: F, a: f64, tol: f64, hint: DecayHint) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    try_integrate_semi_infinite(|t| Ok(f(t)), a, tol, hint)
}

/// Fallible-integrand form of [`integrate_semi_infinite`].
pub fn try_integrate_semi_infinite<F>(f: F, a: f64, tol: f64, hint: DecayHint) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<f64>,
{
    check_tol(tol)?;
    hint.validate()?;
    if !(a.is_finite() && a >= 0.0) {
        return Err(Error::domain("integrate_semi_infinite", a, "finite a >= 0"));
    }
    let cut = tail::choose_cutoff(&f, a, 0.5 * tol, hint)?;
    let finite = adaptive(&f, a, cut.cutoff, SEMI_INFINITE_INITIAL_PANELS, 0.5 * tol)?;
    let err = finite.err + cut.bound;
    Ok(QuadResult {
        value: finite.value,
        abs_err_estimate: err,
        evaluations: finite.evaluations + cut.evaluations,
        converged: finite.converged && err <= tol,
    })
}

/// `∫_0^b f` for `f(t) = O(log 1/t)` as `t → 0⁺`.
///
/// Substitutes `t = b e^{-u}` and integrates the exponentially decaying
/// result over `u ∈ [0, ∞)`.
pub fn integrate_log_singular<F>(f: F, b: f64, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    try_integrate_log_singular(|t| Ok(f(t)), b, tol)
}

/// Fallible-integrand form of [`integrate_log_singular`].
pub fn try_integrate_log_singular<F>(f: F, b: f64, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(b > 0.0 && b.is_finite()) {
        return Err(Error::domain("integrate_log_singular", b, "finite b > 0"));
    }
    let g = |u: f64| {
        let t = b * (-u).exp();
        if t == 0.0 {
            return Ok(0.0);
        }
        Ok(f(t)? * t)
    };
    try_integrate_semi_infinite(g, 0.0, tol, DecayHint::PolynomialTimesExponential { rate: 1.0 })
}
